"""Run every catalog entry at its defaults and print a one-line summary each.

    python3 scripts/reproduce_catalog.py [--symbolic] [--json OUT]
"""

import argparse
import json

from hetnil.catalog import CATALOG
from hetnil.verifier import verify_model


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--symbolic", action="store_true", help="leave all parameters symbolic")
    ap.add_argument("--json", metavar="OUT", help="write the full reports to this file")
    args = ap.parse_args()

    reports = {}
    for name, entry in CATALOG.items():
        conf = entry.build(symbolic=args.symbolic)
        rep = verify_model(conf.model, conf.structure, conf.instanton, relations=conf.relations,
                           golden=conf.golden, name=conf.name)
        reports[name] = json.loads(rep.to_json())
        failed = [k for k, v in rep.verdicts.items() if not v]
        print(f"{name:10s} alpha'={rep.alpha_prime['value']:<40s} {'PASS' if rep.passed else 'FAIL'}"
              + (f"  ({', '.join(failed)})" if failed else ""))
        for d in rep.discrepancies:
            print(f"{'':10s} discrepancy: {d['quantity']}")

    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(reports, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
