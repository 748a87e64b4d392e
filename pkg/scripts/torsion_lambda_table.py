"""Tabulate lambda_T for the torsion points of each order and run the torsion criterion."""

import argparse
import sys

from origami_lab import curves, elliptic as ell


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", type=int, nargs="+", default=list(range(3, 9)))
    ap.add_argument("--control", type=complex, default=1 / 3)
    args = ap.parse_args(argv)

    failures = 0
    for n in args.orders:
        pts = ell.torsion_points(n)
        print(f"order {n}: {len(pts)} points")
        for t in pts:
            lam, _ = ell.lambda_from_torsion(t)
            rep = curves.theorem_check(t)
            failures += not rep.passed
            x = complex(t.point.x)
            print(f"  x={x.real:+.10f}{x.imag:+.10f}i  lambda={complex(lam).real:+.10f}"
                  f"{complex(lam).imag:+.10f}i  nQ={rep.multiple:8s} {'ok' if rep.passed else 'FAIL'}")
    order = curves.critical_value_order(args.control)
    print(f"control lambda={args.control}: critical value order {order if order else '> ' + str(ell.NMAX)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
