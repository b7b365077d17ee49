#!/usr/bin/env python3
"""Run the worked Z/2 example and print one line per checked claim.

    python3 scripts/run_worked_example.py [--json report.json] [--skip-nu-mu]
"""
import argparse
import sys

from skewalg.io import dumps
from skewalg.worked_example import verify


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", help="also write the full report here")
    ap.add_argument("--skip-nu-mu", action="store_true", help="skip the exhaustive nu/mu check")
    args = ap.parse_args()

    rep = verify(nu_mu=not args.skip_nu_mu)
    width = max(len(c.id) for c in rep.claims)
    for c in rep.claims:
        print(f"{'ok  ' if c.passed else 'FAIL'} {c.id:<{width}}  {c.statement}")
    for key, secs in rep.timing.items():
        print(f"  {key}: {secs:.2f}s")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(dumps(rep.to_dict()))
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
