#!/usr/bin/env python3
"""Knit AR quivers of small Dynkin path algebras and compare the number of
indecomposables with the number of positive roots.

    python3 scripts/knit_dynkin.py [--dot-dir out/]
"""
import argparse
import itertools
from pathlib import Path

from skewalg.ar import knit
from skewalg.io import ar_to_dot
from skewalg.quiver import BoundQuiverAlgebra, Quiver


def linear(n):
    return Quiver([str(i) for i in range(1, n + 1)], [(f"a{i}", str(i), str(i + 1)) for i in range(1, n)])


def d(n):
    vs = [str(i) for i in range(1, n + 1)]
    arrows = [(f"a{i}", str(i), str(i + 1)) for i in range(1, n - 1)] + [("b", str(n - 2), str(n))]
    return Quiver(vs, arrows)


def e6():
    return Quiver([str(i) for i in range(1, 7)],
                  [("a1", "1", "2"), ("a2", "2", "3"), ("a3", "3", "4"), ("a4", "4", "5"), ("b", "3", "6")])


def positive_roots(q, bound=4):
    idx = q.vindex

    def form(x):
        return sum(a * a for a in x) - sum(x[idx[a.source]] * x[idx[a.target]] for a in q.arrows)

    return sum(1 for x in itertools.product(range(bound), repeat=len(q.vertices)) if any(x) and form(x) == 1)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dot-dir", help="write one Graphviz file per quiver here")
    args = ap.parse_args()
    cases = {"A2": linear(2), "A3": linear(3), "A4": linear(4), "D4": d(4), "D5": d(5), "E6": e6()}
    for name, q in cases.items():
        ar = knit(BoundQuiverAlgebra(q))
        roots = positive_roots(q)
        print(f"{name}: {len(ar)} indecomposables, {roots} positive roots{'' if len(ar) == roots else '  MISMATCH'}")
        if args.dot_dir:
            out = Path(args.dot_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"{name}.dot").write_text(ar_to_dot(ar, name))


if __name__ == "__main__":
    main()
