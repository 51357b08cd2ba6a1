#!/usr/bin/env python3
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

"""Regenerates data/fixtures/*.poly from literal transcriptions of the
displayed polynomials. Each expression below is typed exactly as printed,
with `a` standing for alpha; sympy only expands it into the term-table format
"num/den e_x e_n e_s e_a" consumed by the C++ library."""

import pathlib
import sys

from sympy import Poly, Rational, expand, symbols

x, n, s, a = symbols("x n s a")
R = Rational

DISPLAYED = {
    "b2_charpoly": (
        "characteristic polynomial of the four-cell quotient of K_s v (K_{n-2s-3} u K_3 u sK_1)",
        x**4 - ((1 + a) * n + (2 * a - 1) * s - 3) * x**3
        + (a * n**2 + ((2 * a**2 + a) * s - 2 * a + 1) * n + (a**2 - a - 1) * s**2 - (5 * a + 4) * s - 6) * x**2
        - ((2 * a**2 * s + 2 * a) * n**2
           - ((-a**3 + 2 * a**2 - 2 * a + 1) * s**2 + (9 * a**2 - 4 * a + 3) * s + 8 * a + 2) * n
           + (3 * a**2 - 6 * a + 2) * s**3 + (11 * a**2 - 24 * a + 8) * s**2 + (18 * a**2 - 32 * a + 14) * s + 8) * x
        + (a**3 * s**2 + 2 * a**2 * s) * n**2
        - ((2 * a**3 - 2 * a**2 + a) * s**3 + (7 * a**3 - a**2 - a + 2) * s**2 + (8 * a**2 + 2 * a) * s) * n
        + (3 * a**3 - 5 * a**2 + 2 * a) * s**4 + (13 * a**3 - 16 * a**2 + 4) * s**3
        + (18 * a**3 - 18 * a**2 - 2 * a + 8) * s**2 + 8 * a * s,
    ),
    "bstar_charpoly": (
        "characteristic polynomial of the four-cell quotient of K_1 v (K_{n-5} u K_3 u K_1)",
        x**4 - ((1 + a) * n + 2 * a - 4) * x**3
        + (a * n**2 + (2 * a**2 - a + 1) * n + a**2 - 6 * a - 11) * x**2
        - ((2 * a**2 + 2 * a) * n**2 + (a**3 - 11 * a**2 - 2 * a - 6) * n + 32 * a**2 - 62 * a + 32) * x
        + (a**3 + 2 * a**2) * n**2 - (9 * a**3 + 5 * a**2 + 2 * a + 2) * n + 34 * a**3 - 39 * a**2 + 8 * a + 12,
    ),
    "difference_cubic": (
        "(charpoly(B2) - charpoly(B*)) / (s - 1)",
        (1 - 2 * a) * x**3 + ((2 * a**2 + a) * n + (a**2 - a - 1) * s + a**2 - 6 * a - 5) * x**2
        - (2 * a**2 * n**2 + ((a**3 - 2 * a**2 + 2 * a - 1) * s + a**3 - 11 * a**2 + 6 * a - 4) * n
           + (3 * a**2 - 6 * a + 2) * s**2 + (14 * a**2 - 30 * a + 10) * s + 32 * a**2 - 62 * a + 24) * x
        + (a**3 * s + a**3 + 2 * a**2) * n**2
        - ((2 * a**3 - 2 * a**2 + a) * s**2 + (9 * a**3 - 3 * a**2 + 2) * s + 9 * a**3 + 5 * a**2 + 2 * a + 2) * n
        + (3 * a**3 - 5 * a**2 + 2 * a) * s**3 + (16 * a**3 - 21 * a**2 + 2 * a + 4) * s**2
        + (34 * a**3 - 39 * a**2 + 12) * s + 34 * a**3 - 39 * a**2 + 8 * a + 12,
    ),
    "difference_cubic_slope": (
        "x-derivative of the difference cubic",
        3 * (1 - 2 * a) * x**2 + 2 * ((2 * a**2 + a) * n + (a**2 - a - 1) * s + a**2 - 6 * a - 5) * x
        - 2 * a**2 * n**2 - ((a**3 - 2 * a**2 + 2 * a - 1) * s + a**3 - 11 * a**2 + 6 * a - 4) * n
        - (3 * a**2 - 6 * a + 2) * s**2 - (14 * a**2 - 30 * a + 10) * s - 32 * a**2 + 62 * a - 24,
    ),
    "slope_at_n_minus_5": (
        "displayed expansion of the slope at x = n - 5",
        (2 * a**2 - 4 * a + 3) * n**2 + ((-a**3 + 4 * a**2 - 4 * a - 1) * s - a**3 - 7 * a**2 + 32 * a - 36) * n
        - (3 * a**2 - 6 * a + 2) * s**2 - (24 * a**2 - 40 * a) * s - 42 * a**2 - 28 * a + 121,
    ),
    "slope_bound_in_s": (
        "displayed slope bound after n := 2s + 6",
        (-2 * a**3 + 13 * a**2 - 18 * a + 8) * s**2 + (-8 * a**3 + 34 * a**2 - 16 * a - 6) * s
        - 6 * a**3 - 12 * a**2 + 20 * a + 13,
    ),
    "slope_bound_at_s2": (
        "displayed slope bound after s := 2",
        -30 * a**3 + 108 * a**2 - 84 * a + 33,
    ),
    "half_alpha_slope": (
        "x-derivative of the difference cubic at alpha = 1/2",
        R(1, 8) * ((16 * n - 20 * s - 124) * x - 4 * n**2 + (3 * s + 29) * n + 2 * s**2 + 12 * s - 8),
    ),
    "half_alpha_slope_at_n_minus_5": (
        "eight times the alpha = 1/2 slope at x = n - 5",
        12 * n**2 - (17 * s + 175) * n + 2 * s**2 + 112 * s + 612,
    ),
    "half_alpha_bound_large_s": (
        "alpha = 1/2 slope bound after n := 2s + 6",
        R(1, 4) * (8 * s**2 - 26 * s - 3),
    ),
    "half_alpha_bound_small_s": (
        "alpha = 1/2 slope bound after n := 18",
        R(1, 4) * (s**2 - 97 * s + 675),
    ),
    "boundary_in_n": (
        "difference cubic at x = n - 5",
        (1 - a) * n**3 + ((3 * a**2 - 3 * a) * s + 4 * a**2 + 8 * a - 16) * n**2
        - ((2 * a**3 + a**2 - 5 * a + 2) * s**2 + (4 * a**3 + 31 * a**2 - 50 * a + 7) * s
           + 4 * a**3 + 52 * a**2 - 25 * a - 79) * n
        + (3 * a**3 - 5 * a**2 + 2 * a) * s**3 + (16 * a**3 - 6 * a**2 - 28 * a + 14) * s**2
        + (34 * a**3 + 56 * a**2 - 175 * a + 37) * s + 34 * a**3 + 146 * a**2 - 202 * a - 118,
    ),
    "boundary_slope_at_2s_plus_6": (
        "n-derivative of boundary_in_n after n := 2s + 6",
        (-2 * a**3 + 11 * a**2 - 19 * a + 10) * s**2 + (-4 * a**3 + 21 * a**2 - 26 * a + 1) * s
        - 4 * a**3 - 4 * a**2 + 13 * a - 5,
    ),
    "boundary_slope_bound_at_s6": (
        "previous line after s := 6",
        -100 * a**3 + 518 * a**2 - 827 * a + 361,
    ),
    "boundary_in_s": (
        "boundary_in_n after n := 2s + 6",
        (-a**3 + 5 * a**2 - 8 * a + 4) * s**3 + (-4 * a**3 + 14 * a**2 - 10 * a - 4) * s**2
        + (2 * a**3 - 30 * a**2 + 43 * a - 15) * s + 10 * a**3 - 22 * a**2 + 20 * a - 4,
    ),
    "boundary_in_s_slope": (
        "s-derivative of boundary_in_s, as displayed in its definition line",
        3 * (-a**3 + 5 * a**2 - 8 * a + 4) * s**2 + 2 * (-4 * a**3 + 14 * a**2 - 10 * a - 4) * s
        + 2 * a**3 - 30 * a**2 + 43 * a - 15,
    ),
    "boundary_in_s_slope_at_s6": (
        "displayed value of the s-derivative at s = 6",
        -154 * a**3 + 678 * a**2 - 941 * a + 379,
    ),
    "boundary_at_s6": (
        "boundary_in_s at s = 6",
        -338 * a**3 + 1382 * a**2 - 1810 * a + 626,
    ),
    "boundary_slope_at_18": (
        "n-derivative of boundary_in_n at n = 18",
        -(2 * a**3 + a**2 - 5 * a + 2) * s**2 + (-4 * a**3 + 77 * a**2 - 58 * a - 7) * s
        - 4 * a**3 + 92 * a**2 - 659 * a + 475,
    ),
    "boundary_slope_at_18_s2": ("", -20 * a**3 + 242 * a**2 - 755 * a + 453),
    "boundary_slope_at_18_s3": ("", -34 * a**3 + 314 * a**2 - 788 * a + 436),
    "boundary_slope_at_18_s4": ("", -52 * a**3 + 384 * a**2 - 811 * a + 415),
    "boundary_slope_at_18_s5": ("", -74 * a**3 + 452 * a**2 - 824 * a + 390),
    "boundary_at_18": (
        "boundary_in_n at n = 18",
        (3 * a**3 - 5 * a**2 + 2 * a) * s**3 + (-20 * a**3 - 24 * a**2 + 62 * a - 22) * s**2
        + (-38 * a**3 + 470 * a**2 - 247 * a - 89) * s - 38 * a**3 + 506 * a**2 - 2992 * a + 1952,
    ),
    "boundary_at_18_s2": ("", -170 * a**3 + 1310 * a**2 - 3222 * a + 1686),
    "boundary_at_18_s3": ("", -251 * a**3 + 1565 * a**2 - 3121 * a + 1487),
    "boundary_at_18_s4": ("", -318 * a**3 + 2078 * a**2 - 2860 * a + 1244),
    "boundary_at_18_s5": ("", -353 * a**3 + 1631 * a**2 - 2427 * a + 957),
    "axis_gap_regrouped": (
        "axis gap regrouped before bounding n",
        (2 * a**2 - 3 * a + 2) * n + (1 - 2 * a) * n + (a**2 - a - 1) * s + a**2 + 24 * a - 20,
    ),
    "axis_gap_in_s": (
        "axis gap after n := 2s + 6 and (1 - 2a) n := 2 + 8a",
        (5 * a**2 - 7 * a + 3) * s + 13 * a**2 + 14 * a - 6,
    ),
    "axis_gap_reduced": ("axis gap after s := 2", 23 * a**2),
}


def term_table(name, note, expr):
    poly = Poly(expand(expr), x, n, s, a)
    lines = [f"# {name}"]
    if note:
        lines.append(f"# {note}")
    lines.append("# num/den e_x e_n e_s e_a")
    for (ex, en, es, ea), c in sorted(poly.terms()):
        c = Rational(c)
        lines.append(f"{c.p}/{c.q} {ex} {en} {es} {ea}")
    return "\n".join(lines) + "\n"


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/fixtures")
    out.mkdir(parents=True, exist_ok=True)
    for name, (note, expr) in DISPLAYED.items():
        (out / f"{name}.poly").write_text(term_table(name, note, expr))
    print(f"wrote {len(DISPLAYED)} fixtures to {out}")


if __name__ == "__main__":
    main()
