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

// alpha_spectra: command-line front end for the alphaspec library.
//
// Exit codes: 0 ok, 1 capacity or runtime error, 2 usage or parse error,
// 3 inconclusive claims under --strict, 4 verification failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "alphaspec/binding.hpp"
#include "alphaspec/errors.hpp"
#include "alphaspec/graph.hpp"
#include "alphaspec/graph6.hpp"
#include "alphaspec/matching.hpp"
#include "alphaspec/rational.hpp"
#include "alphaspec/report.hpp"
#include "alphaspec/spectral.hpp"
#include "alphaspec/verifier.hpp"

namespace {

using namespace alphaspec;

enum ExitCode { kOk = 0, kRuntime = 1, kUsage = 2, kInconclusive = 3, kFailure = 4 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string format = "json";
  std::string output;
  std::string input;
  bool strict = false;
  bool timings = false;
  unsigned workers = 1;

  std::string graph6;
  std::string family;
  std::string alpha = "0";
  std::size_t n = 18;
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  double margin = 1e-6;
};

unsigned default_workers() {
  if (const char* env = std::getenv("ALPHA_SPECTRA_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring ALPHA_SPECTRA_WORKERS=" << env << "\n";
  }
  return 1;
}

// Verification runs take alpha as an exact integer or p/q; only `radius`
// accepts decimals.
Rational exact_alpha(const std::string& text) {
  if (text.find('.') != std::string::npos)
    throw UsageError("alpha must be exact (p/q) for this subcommand: " + text);
  return parse_rational(text);
}

JoinFamilySpec parse_family(const std::string& text) {
  std::vector<std::size_t> fields;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("--family expects s,part,part,...: " + text);
    fields.push_back(std::stoul(item));
  }
  if (fields.size() < 2) throw UsageError("--family needs the apex size and at least one part");
  return JoinFamilySpec::make(fields[0], {fields.begin() + 1, fields.end()});
}

struct GraphInput {
  Graph graph;
  std::optional<JoinFamilySpec> spec;
};

GraphInput read_graph(const Options& opt) {
  if (opt.graph6.empty() == opt.family.empty())
    throw UsageError("give exactly one of --graph6 or --family");
  if (!opt.graph6.empty()) return {parse_graph6(opt.graph6), std::nullopt};
  JoinFamilySpec spec = parse_family(opt.family);
  return {build_family(spec), spec};
}

std::string sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

class Output {
 public:
  explicit Output(const Options& opt) {
    if (!opt.output.empty()) {
      file_.open(opt.output);
      if (!file_) throw std::runtime_error("cannot open output file " + opt.output);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const Options& opt, const Json& j, const std::string& text) {
  Output out(opt);
  if (opt.format == "text")
    out.stream() << text;
  else
    out.stream() << j.dump() << "\n";
}

int run_radius(const Options& opt) {
  const GraphInput in = read_graph(opt);
  const Rational alpha_exact = parse_rational(opt.alpha);
  if (alpha_exact < 0 || alpha_exact > 1) throw UsageError("alpha must lie in [0, 1]");
  const double alpha = to_double(alpha_exact);
  const AlphaMatrix m = alpha_matrix(in.graph, alpha);
  const double rho = spectral_radius(m.entries, opt.tol);
  Json j;
  j["n"] = in.graph.order();
  j["alpha"] = to_string(alpha_exact);
  j["rho"] = rho;
  std::string text = "rho = " + sig12(rho) + "\n";
  if (in.spec) {
    const double rho_q = quotient_largest_eigenvalue(quotient(m, family_partition(*in.spec)));
    j["rho_quotient"] = rho_q;
    text += "rho (quotient) = " + sig12(rho_q) + "\n";
  }
  emit(opt, j, text);
  return kOk;
}

int run_bind(const Options& opt) {
  const GraphInput in = read_graph(opt);
  if (in.graph.order() > kBindingScanCap) throw CapacityError("bind", in.graph.order(), kBindingScanCap);
  const BindingResult r = binding_number(in.graph);
  Json j;
  j["n"] = in.graph.order();
  j["bind"] = to_string(r.value);
  j["witness"] = r.witness.members();
  j["one_binding"] = r.value >= 1;
  emit(opt, j, "bind = " + to_string(r.value) + "\n");
  return kOk;
}

int run_matching(const Options& opt) {
  const GraphInput in = read_graph(opt);
  const Matching m = max_matching(in.graph);
  Json j;
  j["n"] = in.graph.order();
  j["size"] = m.size();
  j["perfect"] = m.is_perfect();
  Json pairs = Json::array();
  for (const auto& [u, v] : m.pairs()) pairs.push_back({u, v});
  j["pairs"] = pairs;
  std::string text = "matching size = " + std::to_string(m.size()) + (m.is_perfect() ? " (perfect)\n" : "\n");
  if (in.graph.order() <= kTutteScanCap) {
    const auto w = tutte_witness(in.graph);
    if (w) {
      j["tutte_set"] = w->s.members();
      j["odd_components"] = w->odd_count;
      text += "Tutte set of size " + std::to_string(w->s.count()) + " leaves " + std::to_string(w->odd_count) +
              " odd components\n";
    } else {
      j["tutte_set"] = nullptr;
    }
  }
  emit(opt, j, text);
  return kOk;
}

int run_quotient(const Options& opt) {
  if (opt.family.empty()) throw UsageError("quotient needs --family");
  const JoinFamilySpec spec = parse_family(opt.family);
  const Rational alpha_exact = parse_rational(opt.alpha);
  if (alpha_exact < 0 || alpha_exact > 1) throw UsageError("alpha must lie in [0, 1]");
  const AlphaMatrix m = alpha_matrix(build_family(spec), to_double(alpha_exact));
  const Partition p = family_partition(spec);
  const QuotientMatrix q = quotient(m, p);
  const double rho_q = quotient_largest_eigenvalue(q);
  Json rows = Json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < q.entries.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < q.entries.cols(); ++k) {
      row.push_back(q.entries(i, k));
      text << (k ? "  " : "") << sig12(q.entries(i, k));
    }
    rows.push_back(row);
    text << "\n";
  }
  Json j;
  j["alpha"] = to_string(alpha_exact);
  j["cell_sizes"] = q.cell_sizes;
  j["quotient"] = rows;
  j["equitable"] = is_equitable(m, p);
  j["rho_quotient"] = rho_q;
  j["rho"] = spectral_radius(m.entries, opt.tol);
  text << "largest eigenvalue = " << sig12(rho_q) << "\n";
  emit(opt, j, text.str());
  return kOk;
}

int run_threshold(const Options& opt) {
  const Rational alpha = exact_alpha(opt.alpha);
  const Rational t = n_alpha_threshold(alpha);
  Json j;
  j["alpha"] = to_string(alpha);
  j["n_alpha"] = to_string(t);
  emit(opt, j, "n(alpha) = " + to_string(t) + "\n");
  return kOk;
}

int finish(const Options& opt, const VerificationReport& report) {
  {
    Output out(opt);
    if (opt.format == "text")
      report.write_text(out.stream());
    else
      report.write_jsonl(out.stream(), opt.timings);
  }
  const StatusCounts c = report.counts();
  if (c.fail > 0) return kFailure;
  if (c.inconclusive > 0 && opt.strict) return kInconclusive;
  return kOk;
}

int run_verify(const std::string& what, const Options& opt) {
  if (what == "identities") return finish(opt, verify_identities());
  if (what == "audit") return finish(opt, verify_audit());
  if (what == "grids") return finish(opt, verify_positivity_grids());
  if (what == "extremal") {
    TheoremParams params;
    params.n = opt.n;
    params.alpha = exact_alpha(opt.alpha);
    params.tol = opt.tol;
    params.margin = opt.margin;
    try {
      params.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    VerificationReport report = verify_extremal_ordering(params, opt.workers);
    report.append(verify_extremal_hypotheses(opt.n));
    return finish(opt, report);
  }
  if (what == "lemmas") {
    if (opt.trials == 0) throw UsageError("--trials must be positive");
    return finish(opt, verify_lemmas(opt.trials, opt.seed, opt.workers));
  }
  if (what == "scan") {
    const Rational alpha = exact_alpha(opt.alpha);
    if (alpha < 0 || alpha > 1) throw UsageError("alpha must lie in [0, 1]");
    if (opt.input.empty() || opt.input == "-") return finish(opt, scan_corpus(std::cin, alpha, opt.workers));
    std::ifstream in(opt.input);
    if (!in) throw std::runtime_error("cannot open input file " + opt.input);
    return finish(opt, scan_corpus(in, alpha, opt.workers));
  }
  throw UsageError("unknown verify target " + what);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  opt.workers = default_workers();

  CLI::App app{"A_alpha spectral radius and perfect-matching verification toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", opt.output, "Write output to this file instead of stdout");
  app.add_option("--workers", opt.workers, "Worker threads (default: $ALPHA_SPECTRA_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--strict", opt.strict, "Exit 3 when any claim is inconclusive");
  app.add_flag("--timings", opt.timings, "Include elapsed time in JSON reports");

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph6", opt.graph6, "Graph in graph6 format");
    sub->add_option("--family", opt.family, "K_s v (K_p1 u ... u K_pq) given as s,p1,...,pq");
  };

  auto* radius = app.add_subcommand("radius", "A_alpha spectral radius");
  add_graph(radius);
  radius->add_option("--alpha", opt.alpha, "alpha as p/q or decimal");
  radius->add_option("--tol", opt.tol, "Eigenvalue tolerance");

  auto* bind = app.add_subcommand("bind", "Exact binding number (n <= 24)");
  add_graph(bind);
  auto* matching = app.add_subcommand("matching", "Maximum matching and Tutte witness");
  add_graph(matching);

  auto* quot = app.add_subcommand("quotient", "Quotient matrix of a join family");
  quot->add_option("--family", opt.family, "s,p1,...,pq")->required();
  quot->add_option("--alpha", opt.alpha, "alpha as p/q or decimal");
  quot->add_option("--tol", opt.tol, "Eigenvalue tolerance");

  auto* threshold = app.add_subcommand("threshold", "Order threshold n(alpha)");
  threshold->add_option("--alpha", opt.alpha, "alpha as p/q")->required();

  auto* verify = app.add_subcommand("verify", "Verification campaigns");
  verify->require_subcommand(1);
  std::string target;
  auto add_target = [&](const std::string& name, const std::string& help) {
    auto* sub = verify->add_subcommand(name, help);
    sub->callback([&target, name] { target = name; });
    return sub;
  };
  add_target("identities", "Exact symbolic identities");
  add_target("audit", "Displayed intermediate reductions, line by line");
  add_target("grids", "Exact sign grids over the constraint regions");
  auto* extremal = add_target("extremal", "Spectral ordering and hypotheses for the extremal graph");
  extremal->add_option("--n", opt.n, "Even order");
  extremal->add_option("--alpha", opt.alpha, "alpha as p/q");
  extremal->add_option("--tol", opt.tol, "Eigenvalue tolerance");
  extremal->add_option("--margin", opt.margin, "Inconclusive band for strict inequalities");
  auto* lemmas = add_target("lemmas", "Matching, transfer and interlacing suites");
  lemmas->add_option("--trials", opt.trials, "Random trials per suite");
  lemmas->add_option("--seed", opt.seed, "Random seed");
  auto* scan = add_target("scan", "Scan a graph6 corpus");
  scan->add_option("--alpha", opt.alpha, "alpha as p/q");
  scan->add_option("--input", opt.input, "graph6 file (default: stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (radius->parsed()) return run_radius(opt);
    if (bind->parsed()) return run_bind(opt);
    if (matching->parsed()) return run_matching(opt);
    if (quot->parsed()) return run_quotient(opt);
    if (threshold->parsed()) return run_threshold(opt);
    return run_verify(target, opt);
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntime;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntime;
  }
}
