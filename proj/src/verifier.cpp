// Copyright 2026 The alphaspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "alphaspec/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "alphaspec/binding.hpp"
#include "alphaspec/errors.hpp"
#include "alphaspec/graph6.hpp"
#include "alphaspec/identities.hpp"
#include "alphaspec/isomorphism.hpp"
#include "alphaspec/matching.hpp"

namespace alphaspec {

namespace {

constexpr double kQuotientAgreement = 1e-8;
constexpr double kTransferMargin = 1e-9;
constexpr double kInterlacingSlack = 1e-9;
constexpr double kCharpolyResidual = 1e-6;
// The runner-up is expected to trail by far more than this.
constexpr double kRunnerUpGap = 1e-4;

// Results are stored by index, so output order never depends on `workers`.
template <typename F>
auto parallel_map(std::size_t count, unsigned workers, F&& fn) {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> failures(count);
  auto run = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < count; i += stride) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (threads <= 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t, threads);
    for (auto& th : pool) th.join();
  }
  std::vector<Result> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Json spec_json(const JoinFamilySpec& spec) {
  Json j;
  j["s"] = spec.apex;
  j["parts"] = spec.parts;
  return j;
}

std::string spec_label(const JoinFamilySpec& spec) {
  std::string out = "s=" + std::to_string(spec.apex) + " parts=(";
  for (std::size_t i = 0; i < spec.parts.size(); ++i)
    out += (i ? "," : "") + std::to_string(spec.parts[i]);
  return out + ")";
}

double radius_of(const Graph& g, double alpha) { return spectral_radius(alpha_matrix(g, alpha).entries); }

const MPoly& separator_charpoly() {
  static const MPoly p = charpoly(separator_quotient_symbolic());
  return p;
}

const MPoly& extremal_charpoly() {
  static const MPoly p = charpoly(extremal_quotient_symbolic());
  return p;
}

std::vector<Rational> univariate_at(const MPoly& p, std::size_t n, std::size_t s, const Rational& alpha) {
  Assignment at;
  at.set(Var::n, Rational(static_cast<long>(n))).set(Var::s, Rational(static_cast<long>(s))).set(Var::a, alpha);
  return p.evaluate_partial(at).univariate_coefficients(Var::x);
}

Rational evaluate_univariate(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

Json bracket_json(const std::optional<RootBracket>& b) {
  if (!b) return nullptr;
  Json j;
  j["lo"] = to_double(b->lo);
  j["hi"] = to_double(b->hi);
  return j;
}

Json identity_witness(const IdentityCheck& check) {
  Json w;
  Json mism = Json::array();
  for (const auto& m : check.mismatches) mism.push_back(m.describe());
  w["mismatches"] = mism;
  w["notes"] = check.notes;
  return w;
}

}  // namespace

void TheoremParams::validate() const {
  if (n % 2 != 0) throw std::invalid_argument("TheoremParams: n must be even");
  if (n < 10) throw std::invalid_argument("TheoremParams: n must be at least 10");
  if (alpha < 0 || alpha > Rational(1, 2)) throw std::invalid_argument("TheoremParams: alpha outside [0, 1/2]");
  if (!(tol > 0) || !(margin > 0)) throw std::invalid_argument("TheoremParams: tol and margin must be positive");
}

Json TheoremParams::to_json() const {
  Json j;
  j["n"] = n;
  j["alpha"] = to_string(alpha);
  j["tol"] = tol;
  j["margin"] = margin;
  return j;
}

Rational n_alpha_threshold(const Rational& alpha) {
  if (alpha < 0 || alpha > Rational(1, 2))
    throw std::invalid_argument("n_alpha_threshold: alpha outside [0, 1/2]");
  const Rational floor_value = 18;
  if (alpha == Rational(1, 2)) return floor_value;
  Rational bound = (2 + 8 * alpha) / (1 - 2 * alpha);
  return bound > floor_value ? bound : floor_value;
}

JoinFamilySpec extremal_spec(std::size_t n) {
  if (n % 2 != 0 || n < 10) throw std::invalid_argument("extremal graph needs even n >= 10");
  return JoinFamilySpec::make(1, {1, 3, n - 5});
}

Graph build_extremal(std::size_t n) { return build_family(extremal_spec(n)); }

JoinFamilySpec separator_spec(std::size_t n, std::size_t s) {
  if (s == 0 || n < 2 * s + 4) throw std::invalid_argument("separator_spec: need s >= 1 and n >= 2s + 4");
  std::vector<std::size_t> parts(s, 1);
  parts.push_back(3);
  parts.push_back(n - 2 * s - 3);
  return JoinFamilySpec::make(s, parts);
}

Partition separator_partition(std::size_t n, std::size_t s) {
  return grouped_partition(separator_spec(n, s),
                           {{n - 2 * s - 3}, {3}, std::vector<std::size_t>(s, 1)});
}

std::vector<JoinFamilySpec> enumerate_g1_configs(std::size_t n) {
  std::vector<JoinFamilySpec> out;
  if (n < 10) throw std::invalid_argument("enumerate_g1_configs: n must be at least 10");
  // Odd parts, non-decreasing, exactly `count` of them, summing to `remaining`.
  std::vector<std::size_t> parts;
  auto fill = [&](auto&& self, std::size_t s, std::size_t count, std::size_t remaining,
                  std::size_t min_part) -> void {
    if (count == 0) {
      if (remaining != 0) return;
      const std::size_t q = parts.size();
      if (q >= 2 && parts[q - 2] >= 3) out.push_back(JoinFamilySpec::make(s, parts));
      return;
    }
    for (std::size_t p = min_part; p * count <= remaining; p += 2) {
      parts.push_back(p);
      self(self, s, count - 1, remaining - p, p);
      parts.pop_back();
    }
  };
  for (std::size_t s = 1; 2 * s + 6 <= n; ++s) fill(fill, s, s + 2, n - s, 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_isomorphic_to_extremal(const Graph& g) {
  const std::size_t n = g.order();
  if (n % 2 != 0 || n < 10) throw std::invalid_argument("is_isomorphic_to_extremal: need even n >= 10");
  std::vector<std::size_t> expected{n - 1, 3, 3, 3, 1};
  expected.insert(expected.end(), n - 5, n - 5);
  std::sort(expected.begin(), expected.end());
  std::vector<std::size_t> actual = g.degrees();
  std::sort(actual.begin(), actual.end());
  if (actual != expected) return false;
  return find_isomorphism(g, build_extremal(n)).has_value();
}

std::optional<RootBracket> certify_largest_root(const std::vector<Rational>& input, double estimate,
                                                double radius) {
  std::vector<Rational> c = input;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.size() < 2 || !std::isfinite(estimate) || !(radius > 0)) return std::nullopt;
  if (c.back() < 0)
    for (auto& v : c) v = -v;
  const Rational lo(estimate - radius);
  const Rational hi(estimate + radius);
  if (evaluate_univariate(c, lo) >= 0) return std::nullopt;
  std::vector<Rational> shifted = c;
  const std::size_t d = shifted.size() - 1;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = d - 1; j + 1 > i; --j) {
      shifted[j] += hi * shifted[j + 1];
      if (j == 0) break;
    }
  for (const auto& v : shifted)
    if (v <= 0) return std::nullopt;
  return RootBracket{lo, hi};
}

VerificationReport verify_extremal_ordering(const TheoremParams& params, unsigned workers) {
  params.validate();
  Stopwatch clock;
  const std::size_t n = params.n;
  const double alpha = to_double(params.alpha);
  VerificationReport report;
  report.campaign = "extremal_ordering";
  report.params = params.to_json();
  const Rational threshold = n_alpha_threshold(params.alpha);
  report.params["n_alpha"] = to_string(threshold);
  report.params["within_threshold"] = Rational(static_cast<long>(n)) >= threshold;

  struct ConfigResult {
    double full = 0;
    double quotient = 0;
    bool equitable = false;
  };
  const auto configs = enumerate_g1_configs(n);
  const auto results = parallel_map(configs.size(), workers, [&](std::size_t i) {
    const Graph g = build_family(configs[i]);
    const AlphaMatrix m = alpha_matrix(g, alpha);
    const Partition p = family_partition(configs[i]);
    ConfigResult r;
    r.full = spectral_radius(m.entries, params.tol);
    r.quotient = quotient_largest_eigenvalue(quotient(m, p));
    r.equitable = is_equitable(m, p);
    return r;
  });

  const JoinFamilySpec star = extremal_spec(n);
  const auto star_it = std::find(configs.begin(), configs.end(), star);
  if (star_it == configs.end()) throw std::logic_error("extremal spec missing from the family");
  const double rho_star = results[static_cast<std::size_t>(star_it - configs.begin())].full;

  std::size_t argmax = 0;
  for (std::size_t i = 1; i < configs.size(); ++i)
    if (results[i].full > results[argmax].full) argmax = i;
  std::optional<std::size_t> runner_up;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    if (configs[i] == star) continue;
    if (!runner_up || results[i].full > results[*runner_up].full) runner_up = i;
  }

  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto& r = results[i];
    const double path_gap = std::abs(r.full - r.quotient);
    Json w;
    w["spec"] = spec_json(configs[i]);
    w["rho_full"] = r.full;
    w["rho_quotient"] = r.quotient;
    w["equitable"] = r.equitable;
    const bool paths_ok = path_gap <= kQuotientAgreement && r.equitable;
    const std::string name = "g1 " + spec_label(configs[i]);
    if (configs[i] == star) {
      report.add_bool(name + " extremal", paths_ok, w);
      continue;
    }
    auto& claim = report.add_margin(name, rho_star - r.full, params.margin, w);
    if (!paths_ok) claim.status = ClaimStatus::fail;
  }

  {
    Json w;
    w["maximizer"] = spec_json(configs[argmax]);
    w["rho_extremal"] = rho_star;
    if (runner_up) {
      w["runner_up"] = spec_json(configs[*runner_up]);
      w["rho_runner_up"] = results[*runner_up].full;
    }
    w["family_size"] = configs.size();
    const double gap = runner_up ? rho_star - results[*runner_up].full : INFINITY;
    auto& claim = report.add_margin("unique_maximizer", gap, std::max(params.margin, kRunnerUpGap), w);
    if (configs[argmax] != star) claim.status = ClaimStatus::fail;
  }

  // Separator graphs K_s v (K_{n-2s-3} u K_3 u sK_1) with their four-cell quotients.
  const auto star_poly = univariate_at(extremal_charpoly(), n, 1, params.alpha);
  const auto star_bracket = certify_largest_root(star_poly, rho_star);
  for (std::size_t s = 2; 2 * s + 4 <= n; ++s) {
    const JoinFamilySpec spec = separator_spec(n, s);
    const Graph g = build_family(spec);
    const AlphaMatrix m = alpha_matrix(g, alpha);
    const Partition p = separator_partition(n, s);
    const QuotientMatrix q = quotient(m, p);
    const double rho = spectral_radius(m.entries, params.tol);
    const double rho_q = quotient_largest_eigenvalue(q);

    const SymbolicMatrix exact = separator_quotient_symbolic().evaluate_partial(
        Assignment()
            .set(Var::n, Rational(static_cast<long>(n)))
            .set(Var::s, Rational(static_cast<long>(s)))
            .set(Var::a, params.alpha));
    double entry_gap = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        entry_gap = std::max(entry_gap, std::abs(q.entries(i, j) - to_double(exact(i, j).evaluate({}))));

    const auto poly = univariate_at(separator_charpoly(), n, s, params.alpha);
    const double residual = std::abs(to_double(evaluate_univariate(poly, Rational(rho))));

    Json w;
    w["spec"] = spec_json(spec);
    w["rho_full"] = rho;
    w["rho_quotient"] = rho_q;
    w["quotient_entry_gap"] = entry_gap;
    w["charpoly_residual"] = residual;
    report.add_bool("quotient_paths s=" + std::to_string(s),
                    std::abs(rho - rho_q) <= kQuotientAgreement && is_equitable(m, p) &&
                        entry_gap <= 1e-9 && residual <= kCharpolyResidual,
                    w);

    // The interlacing bound is only claimed for n >= 2s + 6.
    if (2 * s + 6 > n) continue;
    const Matrix sym = symmetrize(q);
    const double theta2 = symmetric_eigenvalues(sym).eigenvalues.at(1);
    const double bound = static_cast<double>(n) + alpha * static_cast<double>(s) - 2.0 * static_cast<double>(s) - 4.0;
    Json wi;
    wi["theta2"] = theta2;
    wi["bound"] = bound;
    wi["n_minus_5"] = static_cast<double>(n) - 5.0;
    const std::size_t rows[] = {1, 2, 3};
    report.add_bool("second_eigenvalue_bound s=" + std::to_string(s),
                    theta2 <= bound + kInterlacingSlack && bound < static_cast<double>(n) - 5.0 &&
                        interlacing_check(sym, rows, kInterlacingSlack),
                    wi);

    const auto bracket = certify_largest_root(poly, rho);
    Json wo;
    wo["rho_separator"] = rho;
    wo["rho_extremal"] = rho_star;
    wo["separator_bracket"] = bracket_json(bracket);
    wo["extremal_bracket"] = bracket_json(star_bracket);
    const bool certified = bracket && star_bracket && bracket->hi < star_bracket->lo;
    wo["exact_certificate"] = certified;
    auto& claim = report.add_margin("separator_ordering s=" + std::to_string(s), rho_star - rho, params.margin, wo);
    if (claim.status == ClaimStatus::pass && !certified) claim.status = ClaimStatus::inconclusive;
  }

  report.elapsed_seconds = clock.seconds();
  return report;
}

VerificationReport verify_extremal_hypotheses(std::size_t n) {
  if (n % 2 != 0 || n < 10) throw std::invalid_argument("verify_extremal_hypotheses: need even n >= 10");
  if (n > kBindingScanCap) throw CapacityError("verify_extremal_hypotheses", n, kBindingScanCap);
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "extremal_hypotheses";
  report.params["n"] = n;
  const Graph g = build_extremal(n);

  report.add_bool("connected", is_connected(g));

  const BindingResult bind = binding_number(g);
  Json wb;
  wb["bind"] = to_string(bind.value);
  wb["witness"] = bind.witness.members();
  report.add_bool("one_binding", bind.value >= 1 && is_one_binding(g), wb);

  const Matching m = max_matching(g);
  const auto tutte = tutte_witness(g);
  Json wm;
  wm["matching_size"] = m.size();
  if (tutte) {
    wm["tutte_set"] = tutte->s.members();
    wm["odd_components"] = tutte->odd_count;
  }
  report.add_bool("no_perfect_matching", !m.is_perfect() && tutte.has_value(), wm);
  report.add_bool("isomorphic_to_extremal", is_isomorphic_to_extremal(g));
  report.elapsed_seconds = clock.seconds();
  return report;
}

VerificationReport verify_transfer_monotonicity(std::size_t trials, std::uint64_t seed, unsigned workers) {
  if (trials == 0) throw std::invalid_argument("verify_transfer_monotonicity: trials must be positive");
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "transfer_monotonicity";
  report.params["trials"] = trials;
  report.params["seed"] = seed;

  struct Trial {
    std::size_t s;
    std::vector<std::size_t> parts;
    std::size_t from;  // shrinks by one, size >= 2
    std::size_t to;    // grows by one, size >= parts[from]
    Rational alpha;
  };
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::vector<Trial> plan;
  plan.reserve(trials);
  while (plan.size() < trials) {
    Trial t;
    t.s = uniform(1, 4);
    const std::size_t q = uniform(2, 5);
    std::size_t total = t.s;
    for (std::size_t i = 0; i < q; ++i) {
      t.parts.push_back(uniform(1, 8));
      total += t.parts.back();
    }
    if (total > 24) continue;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j)
        if (i != j && t.parts[i] >= t.parts[j] && t.parts[j] >= 2) pairs.emplace_back(i, j);
    if (pairs.empty()) continue;
    const auto [grow, shrink] = pairs[uniform(0, pairs.size() - 1)];
    t.to = grow;
    t.from = shrink;
    t.alpha = make_rational(static_cast<long>(uniform(0, 19)), 20);
    plan.push_back(std::move(t));
  }

  const auto margins = parallel_map(plan.size(), workers, [&](std::size_t k) {
    const Trial& t = plan[k];
    std::vector<std::size_t> after = t.parts;
    ++after[t.to];
    --after[t.from];
    const double a = to_double(t.alpha);
    return radius_of(build_family(JoinFamilySpec::make(t.s, after)), a) -
           radius_of(build_family(JoinFamilySpec::make(t.s, t.parts)), a);
  });

  std::size_t worst = 0;
  std::size_t failures = 0;
  for (std::size_t k = 0; k < plan.size(); ++k) {
    if (margins[k] < margins[worst]) worst = k;
    if (classify_margin(margins[k], kTransferMargin) != ClaimStatus::pass) {
      ++failures;
      Json w;
      w["before"] = spec_json(JoinFamilySpec::make(plan[k].s, plan[k].parts));
      w["alpha"] = to_string(plan[k].alpha);
      report.add_margin("transfer trial " + std::to_string(k), margins[k], kTransferMargin, w);
    }
  }
  Json w;
  w["trials"] = plan.size();
  w["failures"] = failures;
  w["worst_trial"] = worst;
  w["worst_before"] = spec_json(JoinFamilySpec::make(plan[worst].s, plan[worst].parts));
  w["worst_alpha"] = to_string(plan[worst].alpha);
  report.add_margin("transfer_monotonicity", margins[worst], kTransferMargin, w);
  report.elapsed_seconds = clock.seconds();
  return report;
}

VerificationReport verify_tutte_oracle_random(std::size_t trials, std::size_t n, std::uint64_t seed,
                                              unsigned workers) {
  if (n > kTutteScanCap) throw CapacityError("verify_tutte_oracle_random", n, kTutteScanCap);
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "tutte_oracle_random";
  report.params["trials"] = trials;
  report.params["n"] = n;
  report.params["seed"] = seed;

  std::mt19937_64 rng(seed);
  std::vector<Graph> graphs;
  graphs.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const double density = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    graphs.push_back(Graph::from_edges(n, edges));
  }
  const auto verdicts = parallel_map(graphs.size(), workers, [&](std::size_t k) {
    const bool pm = has_perfect_matching(graphs[k]);
    const bool no_witness = !tutte_witness(graphs[k]).has_value();
    return std::pair<bool, bool>{pm, no_witness};
  });
  std::size_t with_pm = 0;
  std::size_t disagreements = 0;
  for (std::size_t k = 0; k < verdicts.size(); ++k) {
    if (verdicts[k].first) ++with_pm;
    if (verdicts[k].first != verdicts[k].second) {
      ++disagreements;
      Json w;
      w["graph6"] = write_graph6(graphs[k]);
      report.add_bool("tutte disagreement " + std::to_string(k), false, w);
    }
  }
  Json w;
  w["graphs"] = graphs.size();
  w["with_perfect_matching"] = with_pm;
  w["disagreements"] = disagreements;
  report.add_bool("tutte_oracle_agreement", disagreements == 0, w);
  report.elapsed_seconds = clock.seconds();
  return report;
}

VerificationReport verify_interlacing(std::size_t trials, std::uint64_t seed) {
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "interlacing";
  report.params["trials"] = trials;
  report.params["seed"] = seed;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> entry(-5.0, 5.0);
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t order = std::uniform_int_distribution<std::size_t>(4, 12)(rng);
    Matrix m(order, order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = i; j < order; ++j) m(i, j) = m(j, i) = entry(rng);
    std::vector<std::size_t> rows(order);
    for (std::size_t i = 0; i < order; ++i) rows[i] = i;
    std::shuffle(rows.begin(), rows.end(), rng);
    rows.resize(std::uniform_int_distribution<std::size_t>(1, order)(rng));
    std::sort(rows.begin(), rows.end());
    if (!interlacing_check(m, rows, kInterlacingSlack)) {
      ++failures;
      Json w;
      w["order"] = order;
      w["rows"] = rows;
      report.add_bool("interlacing trial " + std::to_string(t), false, w);
    }
  }
  Json w;
  w["trials"] = trials;
  w["failures"] = failures;
  report.add_bool("interlacing_random", failures == 0, w);

  const Rational grid[] = {0, Rational(1, 8), Rational(1, 4), Rational(3, 8), Rational(1, 2)};
  std::size_t instances = 0;
  std::size_t violations = 0;
  double tightest = INFINITY;
  for (std::size_t n : {18, 20})
    for (std::size_t s = 2; 2 * s + 6 <= n; ++s)
      for (const Rational& alpha : grid) {
        const double a = to_double(alpha);
        const QuotientMatrix q = quotient(alpha_matrix(build_family(separator_spec(n, s)), a),
                                          separator_partition(n, s));
        const double theta2 = symmetric_eigenvalues(symmetrize(q)).eigenvalues.at(1);
        const double bound = static_cast<double>(n) + a * static_cast<double>(s) - 2.0 * static_cast<double>(s) - 4.0;
        ++instances;
        tightest = std::min(tightest, bound - theta2);
        if (theta2 > bound + kInterlacingSlack || bound >= static_cast<double>(n) - 5.0) ++violations;
      }
  Json wi;
  wi["instances"] = instances;
  wi["violations"] = violations;
  wi["min_bound_minus_theta2"] = tightest;
  report.add_bool("separator_second_eigenvalue", violations == 0, wi);
  report.elapsed_seconds = clock.seconds();
  return report;
}

VerificationReport verify_lemmas(std::size_t trials, std::uint64_t seed, unsigned workers) {
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "lemmas";
  report.params["trials"] = trials;
  report.params["seed"] = seed;
  report.append(verify_tutte_oracle_random(trials, 10, seed, workers));
  report.append(verify_transfer_monotonicity(trials, seed + 1, workers));
  report.append(verify_interlacing(trials, seed + 2));
  report.elapsed_seconds = clock.seconds();
  return report;
}

VerificationReport verify_identities() {
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "identities";
  for (const auto& check : verify_all_identities())
    report.add_bool(check.name, check.holds, identity_witness(check));
  report.elapsed_seconds = clock.seconds();
  return report;
}

VerificationReport verify_audit() {
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "audit";
  for (const auto& check : audit_displayed_steps())
    report.add_bool(check.name, check.holds, identity_witness(check));
  report.elapsed_seconds = clock.seconds();
  return report;
}

VerificationReport verify_positivity_grids() {
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "positivity_grids";
  const Rational step(1, 20);
  report.params["alpha_step"] = to_string(step);

  const auto derived = derive_difference_cubic();
  if (!derived.cubic) throw std::logic_error("positivity grids need the difference cubic");
  const MPoly slope_at_boundary = derived.cubic->differentiate(Var::x).substitute(Var::x, var_n() - 5);
  const MPoly boundary_n = derived.cubic->substitute(Var::x, var_n() - 5);
  const MPoly boundary_s = boundary_n.substitute(Var::n, 2 * var_s() + 6);

  GridRegion hypothesis_region;
  hypothesis_region.axes = {{Var::a, 0, Rational(1, 2), step}, {Var::s, 2, 20, 1}, {Var::n, 18, 80, 1}};
  hypothesis_region.constraints.emplace_back(
      [](const Assignment& at) { return *at.get(Var::n) >= 2 * *at.get(Var::s) + 6; });
  hypothesis_region.constraints.emplace_back(
      [](const Assignment& at) { return *at.get(Var::n) >= n_alpha_threshold(*at.get(Var::a)); });

  GridRegion large_s;
  large_s.axes = {{Var::a, 0, Rational(1, 2), step}, {Var::s, 6, 30, 1}};

  auto record = [&](const std::string& name, const MPoly& p, const GridRegion& region) {
    const SignGridReport grid = sign_grid(p, region);
    Json w;
    w["points"] = grid.points;
    w["min_value"] = to_string(grid.min_value);
    w["argmin"] = grid.argmin.to_string();
    w["non_positive"] = grid.non_positive_count;
    Json first = Json::array();
    for (const auto& at : grid.non_positive) first.push_back(at.to_string());
    w["first_non_positive"] = first;
    auto& claim = report.add_bool(name, grid.all_positive(), w);
    claim.margin = to_double(grid.min_value);
  };
  record("slope_at_n_minus_5_positive", slope_at_boundary, hypothesis_region);
  record("boundary_in_n_positive", boundary_n, hypothesis_region);
  record("boundary_in_s_positive", boundary_s, large_s);
  report.elapsed_seconds = clock.seconds();
  return report;
}

VerificationReport scan_corpus(std::istream& in, const Rational& alpha, unsigned workers) {
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("scan_corpus: alpha outside [0, 1]");
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "scan_corpus";
  report.params["alpha"] = to_string(alpha);
  const double a = to_double(alpha);

  struct Line {
    std::size_t number;
    std::string text;
  };
  std::vector<Line> lines;
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ')) raw.pop_back();
    if (raw.empty()) continue;
    lines.push_back({number, raw});
  }

  struct Outcome {
    std::optional<std::string> error;
    std::size_t n = 0;
    bool pm = false;
    bool no_witness = false;
    std::optional<Json> observation;
  };
  std::map<std::size_t, double> star_radius;
  std::mutex star_lock;
  auto extremal_radius = [&](std::size_t n) {
    {
      std::lock_guard<std::mutex> guard(star_lock);
      if (auto it = star_radius.find(n); it != star_radius.end()) return it->second;
    }
    const double r = radius_of(build_family(JoinFamilySpec::make(1, {1, 3, n - 5})), a);
    std::lock_guard<std::mutex> guard(star_lock);
    star_radius.emplace(n, r);
    return r;
  };

  const auto outcomes = parallel_map(lines.size(), workers, [&](std::size_t k) {
    Outcome o;
    Graph g;
    try {
      g = parse_graph6(lines[k].text);
    } catch (const ParseError& e) {
      o.error = e.what();
      return o;
    }
    o.n = g.order();
    if (g.order() > kTutteScanCap) {
      o.error = CapacityError("scan_corpus", g.order(), kTutteScanCap).what();
      return o;
    }
    o.pm = has_perfect_matching(g);
    o.no_witness = !tutte_witness(g).has_value();
    if (g.order() % 2 == 0 && g.order() >= 6 && is_connected(g) && is_one_binding(g)) {
      const double rho = radius_of(g, a);
      const double rho_star = extremal_radius(g.order());
      Json obs;
      obs["line"] = lines[k].number;
      obs["graph6"] = lines[k].text;
      obs["n"] = g.order();
      obs["perfect_matching"] = o.pm;
      obs["rho"] = rho;
      obs["rho_minus_extremal"] = rho - rho_star;
      o.observation = obs;
    }
    return o;
  });

  std::size_t graphs = 0;
  std::size_t even = 0;
  std::size_t disagreements = 0;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const auto& o = outcomes[k];
    if (o.error) {
      Json e;
      e["line"] = lines[k].number;
      e["message"] = *o.error;
      report.errors.push_back(e);
      continue;
    }
    ++graphs;
    if (o.n % 2 == 0) ++even;
    if (o.pm != o.no_witness) {
      ++disagreements;
      Json w;
      w["line"] = lines[k].number;
      w["graph6"] = lines[k].text;
      w["perfect_matching"] = o.pm;
      report.add_bool("tutte disagreement line " + std::to_string(lines[k].number), false, w);
    }
    if (o.observation) report.observations.push_back(*o.observation);
  }
  if (graphs > 0) {
    Json w;
    w["graphs"] = graphs;
    w["even_order"] = even;
    w["disagreements"] = disagreements;
    report.add_bool("tutte_agreement", disagreements == 0, w);
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

}  // namespace alphaspec
