#!/usr/bin/env python3
"""Timing comparison for the high-degree normal form.

Pushes x^a through the triplet of the three-quadrics ideal with binary
matrix powers (default) and with the one-multiplication-per-step schedule,
for growing a. Coordinates are checked to agree at every size.

Usage: python3 scripts/benchmark_nf.py [max_exponent]
"""

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from projzero import (Form, IdealPresentation, MonomialOrder, build_triplet,
                      parse_form)
from projzero.fields import RationalField
from projzero.triplet import TripletOptions, fast_normal_form


def build():
    Q = RationalField()
    names = ("x", "y", "z")
    gens = [parse_form(s, names, Q) for s in
            ("x*z + y*z - z^2", "x^2 - y^2 + 2*y*z - z^2", "x*y - y^2 + y*z")]
    I = IdealPresentation(field=Q, vars=names, generators=gens)
    order = MonomialOrder.default(3)
    l = parse_form("y + z", names, Q)
    return I, build_triplet(I, order, TripletOptions(linear_form=l))


def coords_only(f, triplet, linear_schedule):
    # skip the symbolic expansion: time only the coordinate computation
    from projzero.quotient import standard_coords
    from projzero.linalg import vec_matmul
    field = f.field
    m = triplet.size
    total = [field.zero] * m
    for mono, coeff in f.terms.items():
        from projzero.triplet import _split_monomial
        a, b = _split_monomial(mono, triplet.d, triplet.order)
        nf_b = standard_coords(Form.monomial(field, f.nvars, b),
                               triplet.piece_d)
        row = list(nf_b)
        for j, e in enumerate(a):
            if e == 0:
                continue
            if linear_schedule:
                for _ in range(e):
                    row = vec_matmul(row, triplet.A[j])
            else:
                row = vec_matmul(row, triplet.A[j].mat_pow(e))
        total = [field.add(t, field.mul(coeff, r)) for t, r in zip(total, row)]
    return total


def run(max_exp):
    Q = RationalField()
    I, triplet = build()
    print(f"{'a':>8} {'binary (s)':>12} {'linear (s)':>12}")
    a = 16
    while a <= max_exp:
        f = Form.monomial(Q, 3, (a, 0, 0))
        t0 = time.perf_counter()
        fast = coords_only(f, triplet, linear_schedule=False)
        t1 = time.perf_counter()
        slow = coords_only(f, triplet, linear_schedule=True)
        t2 = time.perf_counter()
        assert fast == slow
        print(f"{a:>8} {t1 - t0:>12.6f} {t2 - t1:>12.6f}")
        a *= 4
    return 0


if __name__ == "__main__":
    sys.exit(run(int(sys.argv[1]) if len(sys.argv) > 1 else 4096))
