#!/usr/bin/env python3
"""Walk the rank-2 degree-3 example through one full mutation cycle.

Prints the new cluster variable created at every step of the alternating
word 1,2,1,2,... and reports when the variable sequence and the seed return
to their initial values.  With --check, each printed expansion is compared
against the frozen files in tests/golden/.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from qlaurent.seed import load_seed, mutate_seed, seed_equal  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", default=str(REPO / "seeds" / "g2.json"))
    ap.add_argument("--steps", type=int, default=10)
    ap.add_argument(
        "--check", action="store_true", help="compare against tests/golden/"
    )
    args = ap.parse_args()

    root = load_seed(args.seed)
    s, i = root, 1
    failures = 0
    for step in range(1, args.steps + 1):
        s = mutate_seed(s, i)
        var = s.vars[i - 1]
        t = step + 2
        print(f"X_{t} = {var}")
        if args.check:
            golden = REPO / "tests" / "golden" / f"g2_x{t}.txt"
            if golden.exists():
                ok = golden.read_text(encoding="utf-8").strip() == str(var)
                print(f"      golden {golden.name}: {'match' if ok else 'MISMATCH'}")
                failures += 0 if ok else 1
        if seed_equal(s, root):
            print(f"seed returned to the initial seed after {step} mutations")
        i = 3 - i
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
