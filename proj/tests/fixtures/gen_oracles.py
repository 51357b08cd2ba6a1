# Copyright 2026 The alphaspec Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes oracles.json: reference values computed with networkx, numpy and
fractions, independently of the C++ code, for the unit tests to compare against.

    python3 gen_oracles.py
"""

import itertools
import json
import pathlib
import random
from fractions import Fraction

import networkx as nx
import numpy as np

HERE = pathlib.Path(__file__).resolve().parent


def binding_number(g):
    n = g.number_of_nodes()
    nbr = [0] * n
    for u, v in g.edges():
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    full = (1 << n) - 1
    best, witness = None, None
    for mask in range(1, 1 << n):
        cover = 0
        for v in range(n):
            if mask >> v & 1:
                cover |= nbr[v]
        if cover == full:
            continue
        value = Fraction(bin(cover).count("1"), bin(mask).count("1"))
        if best is None or value < best:
            best, witness = value, mask
    return best, witness


def has_perfect_matching(g):
    m = nx.max_weight_matching(g, maxcardinality=True)
    return 2 * len(m) == g.number_of_nodes()


def alpha_radius(g, alpha):
    a = nx.to_numpy_array(g, nodelist=range(g.number_of_nodes()))
    d = np.diag(a.sum(axis=1))
    return float(np.linalg.eigvalsh(alpha * d + (1 - alpha) * a)[-1])


def family(s, parts):
    g = nx.complete_graph(s)
    offset = s
    for p in parts:
        for u, v in itertools.combinations(range(offset, offset + p), 2):
            g.add_edge(u, v)
        g.add_nodes_from(range(offset, offset + p))
        for u in range(s):
            for v in range(offset, offset + p):
                g.add_edge(u, v)
        offset += p
    return g


def random_graph(rng, n, p):
    g = nx.empty_graph(n)
    g.add_edges_from((u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p)
    return g


def main():
    rng = random.Random(20261015)
    out = {}

    corpora = []
    for n in (2, 4, 6, 8):
        lines = (HERE / f"graphs_n{n}.g6").read_text().split()
        with_pm = connected_one_binding = 0
        for line in lines:
            g = nx.from_graph6_bytes(line.encode())
            with_pm += has_perfect_matching(g)
            if nx.is_connected(g) and binding_number(g)[0] >= 1:
                connected_one_binding += 1
        corpora.append({"n": n, "graphs": len(lines), "with_perfect_matching": with_pm,
                        "connected_one_binding": connected_one_binding})
    out["corpora"] = corpora

    samples = []
    for n in list(range(0, 12)) + [62, 63, 64, 70, 100]:
        g = random_graph(rng, n, rng.uniform(0.1, 0.9))
        samples.append({"n": n, "edges": sorted(list(map(list, g.edges()))),
                        "graph6": nx.to_graph6_bytes(g, header=False).decode().strip()})
    out["graph6"] = samples

    bindings = []
    for _ in range(40):
        n = rng.randint(1, 11)
        g = random_graph(rng, n, rng.uniform(0.15, 0.85))
        value, witness = binding_number(g)
        bindings.append({"n": n, "edges": sorted(list(map(list, g.edges()))),
                         "bind": f"{value.numerator}/{value.denominator}", "witness_mask": witness,
                         "matching_size": len(nx.max_weight_matching(g, maxcardinality=True))})
    out["binding"] = bindings

    radii = []
    for n in (18, 20):
        for s, parts in [(1, [1, 3, n - 5])] + [(s, [1] * s + [3, n - 2 * s - 3]) for s in range(2, (n - 6) // 2 + 1)]:
            for alpha in (Fraction(0), Fraction(1, 8), Fraction(1, 4), Fraction(3, 8), Fraction(1, 2)):
                radii.append({"s": s, "parts": parts, "alpha": f"{alpha.numerator}/{alpha.denominator}",
                              "rho": alpha_radius(family(s, parts), float(alpha))})
    for _ in range(30):
        n = rng.randint(2, 14)
        g = random_graph(rng, n, rng.uniform(0.2, 0.9))
        alpha = Fraction(rng.randint(0, 20), 20)
        radii.append({"n": n, "edges": sorted(list(map(list, g.edges()))),
                      "alpha": f"{alpha.numerator}/{alpha.denominator}",
                      "rho": alpha_radius(g, float(alpha))})
    out["radius"] = radii

    (HERE / "oracles.json").write_text(json.dumps(out, indent=1) + "\n")


if __name__ == "__main__":
    main()
