"""Tabulate alpha' on a rational (t, c1, c2, lambda) grid for the h7 family.

The anomaly is solved once symbolically; the grid only evaluates the ratio.
Writes CSV to stdout: t,c1,c2,lambda,alpha_prime,positive.

    python3 scripts/h7_positivity_grid.py --lambdas 0,1/3,1/2,1,2 > grid.csv
"""

import argparse
import csv
import itertools
import sys

from hetnil.catalog import h7_configuration
from hetnil.cli import parse_rational
from hetnil.lie import curvature, pontrjagin_q1
from hetnil.verifier import Geometry, anomaly_solve


def rationals(text):
    return [parse_rational(x) for x in text.split(",")]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--t", default="1/2,1,2")
    ap.add_argument("--c1", default="-1,0,1")
    ap.add_argument("--c2", default="-1,0,1")
    ap.add_argument("--lambdas", default="0,1/3,1/2,1,2")
    args = ap.parse_args()

    conf = h7_configuration()
    G = Geometry.build(conf.model, conf.structure)
    alpha = anomaly_solve(G.dT, pontrjagin_q1(G.K_plus), pontrjagin_q1(curvature(conf.model, conf.instanton)))

    w = csv.writer(sys.stdout)
    w.writerow(["t", "c1", "c2", "lambda", "alpha_prime", "positive"])
    for t, c1, c2, lam in itertools.product(*(rationals(x) for x in (args.t, args.c1, args.c2, args.lambdas))):
        try:
            value = alpha.value_at({"t": t, "c1": c1, "c2": c2, "lambda": lam})
        except ZeroDivisionError:
            value = None
        w.writerow([t, c1, c2, lam, "undefined" if value is None else value,
                    "" if value is None else value > 0])


if __name__ == "__main__":
    main()
