"""Run the numeric identity suite over a seeded set of lambda values."""

import argparse
import json
import sys

from origami_lab.config import IdentitySweepConfig
from origami_lab.curves import verify_identities


def main(argv=None) -> int:
    d = IdentitySweepConfig()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=d.seed)
    ap.add_argument("--count", type=int, default=d.random_lambdas)
    ap.add_argument("--samples", type=int, default=d.samples)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    cfg = IdentitySweepConfig(seed=args.seed, random_lambdas=args.count, samples=args.samples)

    reports = [verify_identities(lam, seed=cfg.seed, tol=cfg.numeric.tol, samples=cfg.samples)
               for lam in cfg.lambdas()]
    if args.json:
        print(json.dumps({"config": cfg.to_json(), "reports": [r.to_json() for r in reports]},
                         indent=2, sort_keys=True))
    else:
        for r in reports:
            worst = max(c.max_error for c in r.checks.values())
            bad = [k for k, c in r.checks.items() if not c.passed]
            print(f"lambda={r.lam:.6f}  worst={worst:.2e}  {'ok' if r.passed else 'FAIL ' + ','.join(bad)}")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
