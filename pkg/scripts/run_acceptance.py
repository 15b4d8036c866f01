"""Run every acceptance case, print one line each and save the details as JSON."""

import argparse
from pathlib import Path

from geotrans.fileio import dumps
from geotrans.verify import CASES, run_case


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--case", action="append", choices=sorted(CASES), help="repeatable; default all")
    ap.add_argument("-o", "--output", default="results/acceptance.json")
    args = ap.parse_args(argv)
    results = [run_case(name) for name in (args.case or list(CASES))]
    for r in results:
        line = r.summary()
        if not r.passed:
            line += "  [" + "; ".join(r.failures()) + "]"
        print(line)
    out = Path(args.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(dumps({"schema": 1, "cases": [r.as_dict() for r in results]}))
    print("wrote", out)
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    raise SystemExit(main())
