"""Command-line surface: seed files, element expressions, checks, exploration.

Exit codes: 0 success, 1 the checked property fails (a Laurent violation, a
failed factorization or membership, a positivity counterexample, an
invariance mismatch), 2 parse or validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .bounds import coprime_check_rank2, power_factorization_check, ub_member
from .seed import (
    EpsilonMismatch,
    LaurentViolation,
    QuantumSeed,
    apply_word,
    load_seed,
    mutate_seed,
    seed_equal,
    seed_to_json,
)
from .expr import parse_element
from .torus import TorusElement, ordered_form


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("seed", help="seed JSON file")
    common.add_argument("--json", action="store_true", help="machine-readable report")

    p = argparse.ArgumentParser(
        prog="qlaurent",
        description="exact engine for generalized quantum cluster algebras",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    sub.add_parser("verify", parents=[common], help="validate compatibility, print dtilde")

    sp = sub.add_parser("mutate", parents=[common], help="apply a mutation word")
    sp.add_argument("--word", nargs="+", required=True, help="directions, e.g. 1 2 1 or 1,2,1")
    sp.add_argument("--var", type=int, help="print only this variable (1-based)")
    sp.add_argument("--out", help="write the re-rooted seed JSON of the result")
    sp.add_argument("--ordered", action="store_true", help="print ordered X1^..*Xm^ form")

    sp = sub.add_parser("expand", parents=[common], help="canonicalize an element expression")
    sp.add_argument("--element", help="element expression")
    sp.add_argument("--element-file", help="file holding an element expression")
    sp.add_argument("--ordered", action="store_true")

    sp = sub.add_parser("laurent-check", parents=[common], help="exercise every mutation division")
    sp.add_argument("--depth", type=int, required=True)

    sp = sub.add_parser("periodic", parents=[common], help="look for returns to the initial seed")
    sp.add_argument("--max-depth", type=int, required=True)

    sp = sub.add_parser("ub-member", parents=[common], help="upper-bound membership test")
    sp.add_argument("--element")
    sp.add_argument("--element-file")
    sp.add_argument(
        "--invariance",
        action="store_true",
        help="compare sampled verdicts against every adjacent re-rooted seed "
        "(X(-e_i) is skipped against direction i: it has no monomial transport there)",
    )
    sp.add_argument(
        "--assume-coprime",
        action="store_true",
        help="run the invariance sample even when coprimality is undetermined",
    )

    sp = sub.add_parser("positivity", parents=[common], help="coefficient nonnegativity over a BFS")
    sp.add_argument("--depth", type=int, required=True)

    sp = sub.add_parser("factorization-check", parents=[common], help="mutated-variable power factorizations")
    sp.add_argument("--i", type=int, required=True, help="direction")
    sp.add_argument("--s", type=int, required=True, help="power")

    return p


# -- exploration -------------------------------------------------------------


def _seed_key(s: QuantumSeed) -> tuple:
    return (s.pair.lam, s.pair.btilde, tuple(str(v) for v in s.vars))


def bfs_explore(seed: QuantumSeed, depth: int) -> dict:
    """Visit all words of length <= depth that never repeat the immediately
    preceding direction; report distinct seeds, returns, and violations."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    seen = {_seed_key(seed): ()}
    frontier: list[tuple[tuple[int, ...], QuantumSeed]] = [((), seed)]
    visited = 1
    returns: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    violations: list[str] = []
    for _ in range(depth):
        nxt = []
        for word, s in frontier:
            for i in range(1, s.pair.n + 1):
                if word and word[-1] == i:
                    continue
                try:
                    s2 = mutate_seed(s, i)
                except LaurentViolation as exc:
                    violations.append(str(exc))
                    continue
                w2 = word + (i,)
                visited += 1
                key = _seed_key(s2)
                if key in seen:
                    returns.append((w2, seen[key]))
                else:
                    seen[key] = w2
                nxt.append((w2, s2))
        frontier = nxt
    return {
        "depth": depth,
        "visited": visited,
        "distinct": len(seen),
        "returns": returns,
        "violations": violations,
    }


def _word_str(word: tuple[int, ...]) -> str:
    return "".join(map(str, word)) if word else "(empty)"


# -- handlers ----------------------------------------------------------------


def _load_element(args, seed: QuantumSeed) -> TorusElement:
    if args.element is not None:
        text = args.element
    elif args.element_file is not None:
        with open(args.element_file, encoding="utf-8") as fh:
            text = fh.read().strip()
    else:
        raise ValueError("provide --element or --element-file")
    return parse_element(text, seed.initial_ctx)


def _cmd_verify(args) -> tuple[int, list[str]]:
    seed = load_seed(args.seed)
    p = seed.pair
    return 0, [
        f"compatible: dtilde = {p.dtilde}",
        f"m = {p.m}, n = {p.n}, d = {seed.exchange.d}",
    ]


def _parse_word(tokens: list[str]) -> list[int]:
    word = []
    for tok in tokens:
        for piece in tok.split(","):
            if piece:
                word.append(int(piece))
    return word


def _cmd_mutate(args) -> tuple[int, list[str]]:
    seed = load_seed(args.seed)
    word = _parse_word(args.word)
    s = apply_word(seed, word)
    render = ordered_form if args.ordered else str
    findings = []
    if args.var is not None:
        if not 1 <= args.var <= s.pair.m:
            raise ValueError(f"--var outside 1..{s.pair.m}")
        findings.append(render(s.vars[args.var - 1]))
    else:
        findings.extend(f"X[{k + 1}] = {render(v)}" for k, v in enumerate(s.vars))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(seed_to_json(s), fh, indent=2)
            fh.write("\n")
        findings.append(f"wrote {args.out}")
    return 0, findings


def _cmd_expand(args) -> tuple[int, list[str]]:
    seed = load_seed(args.seed)
    e = _load_element(args, seed)
    return 0, [ordered_form(e) if args.ordered else str(e)]


def _cmd_laurent_check(args) -> tuple[int, list[str]]:
    seed = load_seed(args.seed)
    rep = bfs_explore(seed, args.depth)
    if rep["violations"]:
        return 1, [f"LaurentViolation: {v}" for v in rep["violations"]]
    return 0, [
        f"explored {rep['visited']} words ({rep['distinct']} distinct seeds) "
        f"to depth {rep['depth']}; every division exact"
    ]


def _alternating_periods(seed: QuantumSeed, start: int, max_depth: int):
    """Walk the alternating word from `start`; return (seed period, variable
    cyclic period) or (None, None) when no return happens within the bound."""
    s = seed
    created: list[TorusElement] = []
    i = start
    for t in range(1, max_depth + 1):
        s = mutate_seed(s, i)
        created.append(s.vars[i - 1])
        if seed_equal(s, seed):
            period = t
            for p in range(1, period + 1):
                if period % p == 0 and all(
                    created[k] == created[(k + p) % period] for k in range(period)
                ):
                    return period, p
            return period, period
        i = 3 - i
    return None, None


def _cmd_periodic(args) -> tuple[int, list[str]]:
    seed = load_seed(args.seed)
    rep = bfs_explore(seed, args.max_depth)
    findings = [f"distinct seeds within depth {rep['depth']}: {rep['distinct']}"]
    initial_returns = [w for w, prior in rep["returns"] if prior == ()]
    if initial_returns:
        shortest = min(initial_returns, key=len)
        findings.append(
            f"word {_word_str(shortest)} returns to the initial seed (period {len(shortest)})"
        )
    else:
        findings.append(f"no return to the initial seed within depth {rep['depth']}")
    if seed.pair.n == 2:
        for start in (1, 2):
            speriod, vperiod = _alternating_periods(seed, start, args.max_depth)
            if speriod is not None:
                findings.append(
                    f"alternating word starting {start}: seed period {speriod}, "
                    f"variable sequence period {vperiod}"
                )
    if rep["violations"]:
        return 1, findings + [f"LaurentViolation: {v}" for v in rep["violations"]]
    return 0, findings


def _invariance_recipes(seed: QuantumSeed) -> list[tuple]:
    n, m = seed.pair.n, seed.pair.m
    recipes: list[tuple] = []
    for k in range(1, n + 1):
        recipes.append(("var", (), k))
    words = [(i,) for i in range(1, n + 1)]
    words += [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if j != i]
    for w in words:
        recipes.append(("var", w, w[-1]))
    for l in range(n + 1, m + 1):
        recipes.append(("mono", tuple(1 if x == l - 1 else 0 for x in range(m))))
        recipes.append(("mono", tuple(-1 if x == l - 1 else 0 for x in range(m))))
    for k in range(1, n + 1):
        recipes.append(("negvar", k))
    return recipes


def _realize(recipe: tuple, root: QuantumSeed) -> TorusElement:
    kind = recipe[0]
    if kind == "var":
        _, word, k = recipe
        return apply_word(root, word).vars[k - 1]
    if kind == "mono":
        return root.initial_ctx.basis(recipe[1])
    _, k = recipe
    m = root.pair.m
    return root.initial_ctx.basis(tuple(-1 if x == k - 1 else 0 for x in range(m)))


def _invariance_sample(root: QuantumSeed) -> tuple[int, list[str]]:
    recipes = _invariance_recipes(root)
    base = {rec: ub_member(root, _realize(rec, root)) for rec in recipes}
    checked = 0
    mismatches: list[str] = []
    for i in range(1, root.pair.n + 1):
        adjacent = mutate_seed(root, i).reroot()
        for rec in recipes:
            if rec[0] == "negvar" and rec[1] == i:
                continue
            if rec[0] == "var":
                transported = ("var", (i,) + rec[1], rec[2])
            else:
                transported = rec
            verdict = ub_member(adjacent, _realize(transported, adjacent))
            checked += 1
            if verdict != base[rec]:
                mismatches.append(
                    f"verdict changed across direction {i} for {rec}: "
                    f"{base[rec]} -> {verdict}"
                )
    return checked, mismatches


def _cmd_ub_member(args) -> tuple[int, list[str]]:
    seed = load_seed(args.seed)
    findings: list[str] = []
    code = 0
    if args.element is not None or args.element_file is not None:
        y = _load_element(args, seed)
        verdict = ub_member(seed, y)
        findings.append(f"member: {str(verdict).lower()}")
        if not verdict:
            code = 1
    elif not args.invariance:
        raise ValueError("provide --element, --element-file, or --invariance")
    if args.invariance:
        coprime = coprime_check_rank2(seed)
        findings.append(
            "coprime: " + {True: "true", False: "false", None: "unknown"}[coprime]
        )
        if coprime is True or args.assume_coprime:
            checked, mismatches = _invariance_sample(seed)
            findings.append(f"invariance sample: {checked} comparisons")
            if mismatches:
                findings.extend(mismatches)
                code = 1
            else:
                findings.append("all verdicts agree across adjacent seeds")
        elif coprime is False:
            findings.append("seed is not coprime; invariance sample skipped")
        else:
            findings.append(
                "coprimality unknown; pass --assume-coprime to run the invariance sample"
            )
    return code, findings


def _cmd_positivity(args) -> tuple[int, list[str]]:
    seed = load_seed(args.seed)
    if args.depth < 0:
        raise ValueError("depth must be nonnegative")
    offenders: list[str] = []
    count = 0
    frontier = [((), seed)]
    seen_words = [((), seed)]
    for _ in range(args.depth):
        nxt = []
        for word, s in frontier:
            for i in range(1, s.pair.n + 1):
                if word and word[-1] == i:
                    continue
                s2 = mutate_seed(s, i)
                nxt.append((word + (i,), s2))
        frontier = nxt
        seen_words.extend(nxt)
    for word, s in seen_words:
        for k, v in enumerate(s.vars):
            count += 1
            for c, f in v.terms.items():
                if not f.is_nonneg():
                    offenders.append(
                        f"negative coefficient at word {_word_str(word)}, "
                        f"variable {k + 1}, X{c}"
                    )
    if offenders:
        return 1, offenders
    return 0, [
        f"checked {count} variable expansions over {len(seen_words)} seeds "
        f"to depth {args.depth}: all coefficients nonnegative"
    ]


def _cmd_factorization_check(args) -> tuple[int, list[str]]:
    seed = load_seed(args.seed)
    ok = power_factorization_check(seed, args.i, args.s)
    if ok:
        return 0, [f"(X'_{args.i})^{args.s}: both factorizations hold"]
    return 1, [f"(X'_{args.i})^{args.s}: factorization mismatch"]


_HANDLERS = {
    "verify": _cmd_verify,
    "mutate": _cmd_mutate,
    "expand": _cmd_expand,
    "laurent-check": _cmd_laurent_check,
    "periodic": _cmd_periodic,
    "ub-member": _cmd_ub_member,
    "positivity": _cmd_positivity,
    "factorization-check": _cmd_factorization_check,
}


def run_command(argv: list[str]) -> int:
    t0 = time.perf_counter()
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        code, findings = _HANDLERS[args.cmd](args)
        status = "ok" if code == 0 else "violation"
    except LaurentViolation as exc:
        code, status, findings = 1, "violation", [f"LaurentViolation: {exc}"]
    except EpsilonMismatch as exc:
        code, status, findings = 1, "violation", [f"EpsilonMismatch: {exc}"]
    except (ValueError, ArithmeticError, SyntaxError, KeyError, OSError) as exc:
        code, status, findings = 2, "error", [f"{type(exc).__name__}: {exc}"]
    report = {
        "command": args.cmd,
        "status": status,
        "findings": findings,
        "timings": {"total_s": round(time.perf_counter() - t0, 6)},
    }
    if args.json:
        print(json.dumps(report, indent=2))
    elif findings:
        print("\n".join(findings))
    return code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
