"""Print every exact check on the quaternion origami and exit nonzero on a failure."""

import json
import sys

from origami_lab.wsuite import w_report


def main() -> int:
    report = w_report()
    for name, row in report.items():
        print(f"{'ok  ' if row['passed'] else 'FAIL'} {name}")
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0 if all(r["passed"] for r in report.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
