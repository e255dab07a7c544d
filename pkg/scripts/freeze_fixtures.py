"""Write the regression fixtures under tests/data from the oracle routes.

The c-sequence uses the b coefficients from direct polynomial expansion and
the S table comes from brute-force summation, so neither depends on the
closed forms the tests are checking.
"""

import argparse
import json
from pathlib import Path

from dicksonlab import make_field
from dicksonlab.charsums import b_expansion_oracle, compute_c, sum_table_bruteforce

OUT = Path(__file__).resolve().parent.parent / "tests" / "data"


def freeze(p: int, e: int, out: Path) -> Path:
    spec = make_field(p, e)
    c = compute_c(spec, b_expansion_oracle(spec))
    S = sum_table_bruteforce(spec)
    doc = {
        "field": spec.to_json(),
        "c": [spec.render(v) for v in c.values],
        "S": [spec.render(v) for v in S.values],
    }
    path = out / f"sums_q{spec.q}.json"
    path.write_text(json.dumps(doc, indent=1) + "\n")
    return path


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fields", nargs="*", default=["3,1", "5,1"], help="p,e pairs")
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for pe in args.fields:
        p, e = (int(s) for s in pe.split(","))
        print(freeze(p, e, args.out))


if __name__ == "__main__":
    main()
