#!/usr/bin/env python3
"""Survey every seed file: exchange-graph exploration and membership spot checks.

For each seed this walks all mutation words to a depth, confirming that every
exchange division is exact, then reports distinct-seed counts, returns to the
initial seed, coefficient positivity, the rank-2 coprimality verdict, and
upper-bound membership of the one-step variables.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from qlaurent.bounds import coprime_check_rank2, ub_member  # noqa: E402
from qlaurent.cli import bfs_explore  # noqa: E402
from qlaurent.seed import load_seed, mutate_seed  # noqa: E402


def survey(path: Path, depth: int) -> None:
    print(f"== {path.name} ==")
    seed = load_seed(str(path))
    t0 = time.perf_counter()
    rep = bfs_explore(seed, depth)
    dt = time.perf_counter() - t0
    print(
        f"  depth {depth}: {rep['visited']} words, {rep['distinct']} distinct seeds,"
        f" {len(rep['returns'])} returns ({dt:.2f}s)"
    )
    for v in rep["violations"]:
        print(f"  LAURENT VIOLATION: {v}")

    verdict = coprime_check_rank2(seed)
    print(f"  coprime (rank-2 search): {verdict}")

    for i in range(1, seed.pair.n + 1):
        var = mutate_seed(seed, i).vars[i - 1]
        inv = seed.initial_ctx.basis(
            tuple(-1 if l == i - 1 else 0 for l in range(seed.pair.m))
        )
        print(
            f"  direction {i}: ub_member(X'_{i}) = {ub_member(seed, var)},"
            f" ub_member(X_{i}^-1) = {ub_member(seed, inv)}"
        )


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("seeds", nargs="*", help="seed JSON files (default: seeds/*.json)")
    ap.add_argument("--depth", type=int, default=6)
    args = ap.parse_args()

    paths = [Path(p) for p in args.seeds] or sorted((REPO / "seeds").glob("*.json"))
    for path in paths:
        survey(path, args.depth)
    return 0


if __name__ == "__main__":
    sys.exit(main())
