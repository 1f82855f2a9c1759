#!/usr/bin/env python3
"""Writes data/H3.json, data/F4.json and their cox tuple files.

H3 uses its geometric representation in the simple-root basis over Q(zeta_5):
s_i(v) = v - 2B(alpha_i, v) alpha_i with 2B(alpha_1, alpha_2) = -tau,
tau = -zeta^2 - zeta^3. F4 uses orthogonal reflections in R^4.
"""
import json
import sys
from fractions import Fraction
from pathlib import Path

import sympy as sp

OUT = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data"

# Elements of Q(zeta_5) as coefficient lists in 1, z, z^2, z^3.
ONE = [1]
ZERO = [0]
TAU = [0, 0, -1, -1]
NEG_TAU = [0, 0, 1, 1]


def cyc(c, m=5):
    return {"m": m, "c": [str(x) for x in c]}


def rat(x):
    return str(Fraction(x).limit_denominator())


def h3():
    # Entries of 2B; -2B off the diagonal is what appears in s_i.
    twoB = [[[2], NEG_TAU, ZERO], [NEG_TAU, [2], [-1]], [ZERO, [-1], [2]]]
    gens = []
    for i in range(3):
        m = []
        for r in range(3):
            row = []
            for c in range(3):
                if r != i:
                    row.append(cyc(ONE if r == c else ZERO))
                else:
                    # delta_ic - 2B_ic
                    v = [-x for x in twoB[i][c]]
                    if c == i:
                        v = [1 - twoB[i][c][0]]
                    row.append(cyc(v))
            m.append(row)
        gens.append(m)
    covectors = [[cyc(x) for x in twoB[i]] for i in range(3)]
    group = {"name": "H3", "conductor": 5, "dim": 3, "generators": gens}
    a = lambda i: covectors[i]
    cox = {
        "group": "H3",
        "cox": [
            {"type": "A_0", "monomials": [[]]},
            {"type": "A_1", "monomials": [[a(0)]]},
            {"type": "A_1^2", "monomials": [[a(0), a(2)]]},
            {"type": "H_3", "monomials": [[a(0), a(1), a(2)]]},
        ],
    }
    return group, cox


def f4():
    half = sp.Rational(1, 2)
    roots = [
        sp.Matrix([0, 1, -1, 0]),
        sp.Matrix([0, 0, 1, -1]),
        sp.Matrix([0, 0, 0, 1]),
        sp.Matrix([half, -half, -half, -half]),
    ]
    gens = []
    for a in roots:
        s = sp.eye(4) - 2 * a * a.T / (a.T * a)[0]
        gens.append([[rat(s[r, c]) for c in range(4)] for r in range(4)])
    cov = [[rat(x) for x in a] for a in roots]
    group = {"name": "F4", "conductor": 1, "dim": 4, "generators": gens, "long_root": ["1", "-1", "0", "0"]}
    a = lambda i: cov[i]
    # Long simple roots alpha_1, alpha_2; short alpha_3, alpha_4.
    cox = {
        "group": "F4",
        "cox": [
            {"type": "A_0", "monomials": [[]]},
            {"type": "A_1", "monomials": [[a(0)]]},
            {"type": "~A_1", "monomials": [[a(2)]]},
            {"type": "A_1~A_1", "monomials": [[a(0), a(2)]]},
            {"type": "B_2", "monomials": [[a(1), a(2)]]},
            {"type": "B_3", "monomials": [[a(0), a(1), a(2)]]},
            {"type": "C_3", "monomials": [[a(1), a(2), a(3)]]},
            {"type": "F_4", "monomials": [[a(0), a(1), a(2), a(3)]]},
        ],
    }
    return group, cox


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, (group, cox) in {"H3": h3(), "F4": f4()}.items():
        (OUT / f"{name}.json").write_text(json.dumps(group) + "\n")
        (OUT / f"{name}_cox.json").write_text(json.dumps(cox) + "\n")


if __name__ == "__main__":
    main()
