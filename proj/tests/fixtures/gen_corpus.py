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

"""Regenerates the exhaustive small-graph corpora used by the matching tests.

Every graph on n vertices (up to isomorphism) is produced by extending each
graph on n - 1 vertices with one new vertex joined to every possible subset,
then deduplicating with a nauty certificate. Output is graph6, one per line,
sorted, written by networkx so the encoder is independent of the C++ one.

    python3 gen_corpus.py            # writes graphs_n{2,4,6,8}.g6 here
"""

import itertools
import pathlib

import networkx as nx
import pynauty

EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def certificate(g):
    n = g.number_of_nodes()
    adjacency = {v: list(g.neighbors(v)) for v in range(n)}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adjacency))


def extend(graphs, n):
    seen = {}
    for g in graphs:
        for k in range(n):
            for subset in itertools.combinations(range(n - 1), k):
                h = g.copy()
                h.add_node(n - 1)
                h.add_edges_from((n - 1, v) for v in subset)
                seen.setdefault(certificate(h), h)
    return list(seen.values())


def main():
    here = pathlib.Path(__file__).resolve().parent
    graphs = [nx.empty_graph(1)]
    for n in range(2, 9):
        graphs = extend(graphs, n)
        assert len(graphs) == EXPECTED[n], (n, len(graphs))
        if n % 2 == 0:
            lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in graphs)
            (here / f"graphs_n{n}.g6").write_text("\n".join(lines) + "\n")
            print(f"n={n}: {len(lines)} graphs")


if __name__ == "__main__":
    main()
