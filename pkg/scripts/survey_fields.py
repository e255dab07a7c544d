"""Survey PP exponents of E_n(1, x) over several fields and report how well
the necessary-condition filters screen the range n = 1 .. q^2 - 1.

    python scripts/survey_fields.py --fields 3,1 5,1 7,1 3,2 --out survey.csv
"""

import argparse
import csv
import sys
import time
from dataclasses import dataclass, field

from dicksonlab import make_field
from dicksonlab.cli import survey_rows


@dataclass
class SurveyConfig:
    fields: list[tuple[int, int]] = field(default_factory=lambda: [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1)])
    out: str | None = None


def summarize(p: int, e: int) -> dict:
    spec = make_field(p, e)
    t0 = time.perf_counter()
    rows = survey_rows(spec, spec.q**2 - 1)[1:]
    pps = [r.n for r in rows if r.is_pp]
    survivors = sum(r.filter_overall for r in rows)
    unsound = [r.n for r in rows if r.is_pp and not r.filter_overall]
    return {
        "q": spec.q,
        "p": p,
        "e": e,
        "pp_count": len(pps),
        "pp_exponents": " ".join(map(str, pps)),
        "filter_survivors": survivors,
        "screened_out": len(rows) - survivors,
        "unsound": " ".join(map(str, unsound)),
        "seconds": f"{time.perf_counter() - t0:.2f}",
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fields", nargs="*", help="p,e pairs")
    ap.add_argument("--out")
    args = ap.parse_args()
    cfg = SurveyConfig(out=args.out)
    if args.fields:
        cfg.fields = [tuple(int(s) for s in pe.split(",")) for pe in args.fields]

    results = [summarize(p, e) for p, e in cfg.fields]
    fh = open(cfg.out, "w", newline="") if cfg.out else sys.stdout
    w = csv.DictWriter(fh, fieldnames=list(results[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(results)
    if cfg.out:
        fh.close()
    if any(r["unsound"] for r in results):
        sys.exit(2)


if __name__ == "__main__":
    main()
