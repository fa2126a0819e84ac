"""Compatible pairs, exchange data, quantum seeds, and mutation.

A seed carries the current compatible pair (Lambda_t, Btilde_t) together with
the expansions of its m cluster variables inside the fixed initial torus.
Mutation replaces variable i by the generalized exchange sum and divides it
exactly by the old variable on the right; the division succeeding is a
constructive witness of the Laurent phenomenon, and its failure (which the
theory rules out for valid input) raises LaurentViolation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from .coeff import NotDivisible, QCoefficient
from .expr import parse_coefficient
from .linalg import Matrix, mat_mul, rank, transpose
from .torus import DimensionMismatch, TorusContext, TorusElement, t_right_divide_exact


class NotCompatible(ValueError):
    """Lambda * Btilde is not -[D;0] with positive diagonal D."""


class NotSkewSymmetric(ValueError):
    """The candidate Lambda is not skew-symmetric."""


class RankDeficient(ValueError):
    """Btilde does not have full column rank."""


class EpsilonMismatch(RuntimeError):
    """Mutation with epsilon = +1 and epsilon = -1 disagreed."""


class NegativeMutableExponent(ValueError):
    """A cluster monomial asked for a negative power of a non-monomial variable."""


class LaurentViolation(ArithmeticError):
    """A mutation's exact right division failed."""


Vec = tuple[int, ...]


def positive_part(v: Vec | list[int]) -> Vec:
    """Entrywise max(x, 0)."""
    return tuple(max(int(x), 0) for x in v)


def _skew(lam: Matrix, a: Vec, b: Vec) -> int:
    return sum(
        a[i] * lam[i][j] * b[j]
        for i in range(len(a))
        for j in range(len(b))
        if lam[i][j]
    )


def check_compatible(lam: Matrix, btilde: Matrix) -> Vec:
    """Return dtilde when Lambda*Btilde = -[D;0]; validate rank and D*B skew.

    Raises NotSkewSymmetric / NotCompatible (naming the offending entry) /
    RankDeficient.
    """
    lam = tuple(tuple(int(x) for x in row) for row in lam)
    btilde = tuple(tuple(int(x) for x in row) for row in btilde)
    m = len(lam)
    if any(len(row) != m for row in lam):
        raise DimensionMismatch("lambda must be square")
    if len(btilde) != m:
        raise DimensionMismatch("btilde must have m rows")
    n = len(btilde[0]) if btilde else 0
    if any(len(row) != n for row in btilde):
        raise DimensionMismatch("ragged btilde")
    if not 1 <= n <= m:
        raise DimensionMismatch("need m >= n >= 1")
    for i in range(m):
        for j in range(m):
            if lam[i][j] != -lam[j][i]:
                raise NotSkewSymmetric(f"lambda[{i + 1}][{j + 1}] != -lambda[{j + 1}][{i + 1}]")

    prod = mat_mul(lam, btilde)
    dtilde = []
    for k in range(n):
        if prod[k][k] >= 0:
            raise NotCompatible(
                f"(lambda*btilde)[{k + 1}][{k + 1}] = {prod[k][k]}, expected negative"
            )
        dtilde.append(-prod[k][k])
    for i in range(m):
        for j in range(n):
            if i != j and prod[i][j] != 0:
                raise NotCompatible(
                    f"(lambda*btilde)[{i + 1}][{j + 1}] = {prod[i][j]}, expected 0"
                )
    if rank(btilde) != n:
        raise RankDeficient("btilde has rank below n")
    for k in range(n):
        for l in range(n):
            if dtilde[k] * btilde[k][l] != -dtilde[l] * btilde[l][k]:
                raise NotCompatible(f"D*B is not skew-symmetric at ({k + 1},{l + 1})")
    return tuple(dtilde)


@dataclass(frozen=True, eq=True)
class CompatiblePair:
    """(Lambda, Btilde) with Lambda*Btilde = -[D;0]; dtilde is D's diagonal."""

    m: int
    n: int
    lam: Matrix
    btilde: Matrix
    dtilde: Vec

    @staticmethod
    def from_matrices(lam: Matrix, btilde: Matrix) -> CompatiblePair:
        dtilde = check_compatible(lam, btilde)
        lam = tuple(tuple(int(x) for x in row) for row in lam)
        btilde = tuple(tuple(int(x) for x in row) for row in btilde)
        return CompatiblePair(len(lam), len(btilde[0]), lam, btilde, dtilde)

    def column(self, i: int) -> Vec:
        """b^i, the i-th exchange column (1-based), as a length-m vector."""
        return tuple(self.btilde[l][i - 1] for l in range(self.m))

    def principal(self) -> Matrix:
        return tuple(self.btilde[k] for k in range(self.n))


def _mutation_matrices(pair: CompatiblePair, i: int, eps: int) -> tuple[Matrix, Matrix]:
    m, n, b = pair.m, pair.n, pair.btilde
    idx = i - 1
    e = tuple(
        tuple(
            (-1 if k == idx else max(-eps * b[k][idx], 0))
            if l == idx
            else (1 if k == l else 0)
            for l in range(m)
        )
        for k in range(m)
    )
    f = tuple(
        tuple(
            (-1 if l == idx else max(eps * b[idx][l], 0))
            if k == idx
            else (1 if k == l else 0)
            for l in range(n)
        )
        for k in range(n)
    )
    return e, f


def mutate_pair(pair: CompatiblePair, i: int) -> CompatiblePair:
    """mu_i at the matrix level; computed for both epsilon signs and compared."""
    if not 1 <= i <= pair.n:
        raise ValueError(f"direction {i} outside 1..{pair.n}")
    results = []
    for eps in (1, -1):
        e, f = _mutation_matrices(pair, i, eps)
        btilde = mat_mul(mat_mul(e, pair.btilde), f)
        lam = mat_mul(mat_mul(transpose(e), pair.lam), e)
        results.append((lam, btilde))
    if results[0] != results[1]:
        raise EpsilonMismatch(f"mu_{i} differs between epsilon = +1 and -1")
    return CompatiblePair.from_matrices(*results[0])


@dataclass(frozen=True, eq=True)
class ExchangeData:
    """Exchange degrees d and coefficient families h.

    h[k] lists h_{k,0}, ..., h_{k,d_k} with h_{k,0} = h_{k,d_k} = 1 and the
    palindromic identity h_{k,r} = h_{k,d_k-r}.
    """

    d: Vec
    h: tuple[tuple[QCoefficient, ...], ...]

    def __post_init__(self) -> None:
        if len(self.h) != len(self.d):
            raise ValueError("need one h-family per mutable direction")
        for k, dk in enumerate(self.d):
            if dk < 1:
                raise ValueError(f"d[{k + 1}] must be positive")
            fam = self.h[k]
            if len(fam) != dk + 1:
                raise ValueError(f"h family {k + 1} must have length d+1 = {dk + 1}")
            if not fam[0].is_one() or not fam[dk].is_one():
                raise ValueError(f"h[{k + 1},0] and h[{k + 1},{dk}] must be 1")
            for r in range(dk + 1):
                if fam[r] != fam[dk - r]:
                    raise ValueError(f"h family {k + 1} is not palindromic at r={r}")

    @staticmethod
    def default(d: Vec | list[int]) -> ExchangeData:
        """Formal palindromic families [1, h[k,1], ..., h[k,1], 1]."""
        d = tuple(int(x) for x in d)
        fams = []
        for k, dk in enumerate(d, start=1):
            fam = [QCoefficient.one()]
            for r in range(1, dk):
                fam.append(QCoefficient.h_symbol(k, min(r, dk - r)))
            fam.append(QCoefficient.one())
            fams.append(tuple(fam))
        return ExchangeData(d, tuple(fams))


def _validate_exchange(pair: CompatiblePair, exchange: ExchangeData) -> None:
    if len(exchange.d) != pair.n:
        raise ValueError("exchange data covers the wrong number of directions")
    for k in range(pair.n):
        dk = exchange.d[k]
        for l in range(pair.m):
            if pair.btilde[l][k] % dk:
                raise ValueError(
                    f"d[{k + 1}] = {dk} does not divide btilde[{l + 1}][{k + 1}]"
                )


@dataclass(frozen=True, eq=False)
class QuantumSeed:
    """Current pair plus the m variable expansions in the initial torus."""

    pair: CompatiblePair
    exchange: ExchangeData
    initial_ctx: TorusContext
    vars: tuple[TorusElement, ...]
    history: Vec

    @staticmethod
    def initial(pair: CompatiblePair, exchange: ExchangeData) -> QuantumSeed:
        _validate_exchange(pair, exchange)
        ctx = TorusContext(pair.m, pair.lam)
        basis = tuple(
            ctx.basis(tuple(1 if l == k else 0 for l in range(pair.m)))
            for k in range(pair.m)
        )
        return QuantumSeed(pair, exchange, ctx, basis, ())

    def reroot(self) -> QuantumSeed:
        """Fresh initial seed built from the current pair and exchange data."""
        return QuantumSeed.initial(self.pair, self.exchange)

    def is_root(self) -> bool:
        if self.pair.lam != self.initial_ctx.lam:
            return False
        return all(
            v == self.initial_ctx.basis(tuple(1 if l == k else 0 for l in range(self.pair.m)))
            for k, v in enumerate(self.vars)
        )


def expand_current_monomial(seed: QuantumSeed, v: Vec | list[int]) -> TorusElement:
    """The ordered current-cluster monomial with exponent vector v.

    Returns q^(S/2) * vars[1]^(v_1) * ... * vars[m]^(v_m) with
    S = sum over l < k of v_l v_k lambda_t[k][l], evaluated in the initial
    torus.  Mutable indices with multi-term expansions must have v_k >= 0.
    """
    v = tuple(int(x) for x in v)
    m = seed.pair.m
    if len(v) != m:
        raise DimensionMismatch(f"exponent vector must have length {m}")
    for k in range(seed.pair.n):
        if v[k] < 0 and len(seed.vars[k].terms) > 1:
            raise NegativeMutableExponent(
                f"negative exponent {v[k]} on non-monomial variable {k + 1}"
            )
    lam = seed.pair.lam
    s = sum(v[l] * v[k] * lam[k][l] for k in range(m) for l in range(k))
    acc = seed.initial_ctx.scalar(QCoefficient.q_power(s))
    for k in range(m):
        if v[k]:
            acc = acc * seed.vars[k] ** v[k]
    return acc


def mutate_seed(seed: QuantumSeed, i: int) -> QuantumSeed:
    """mu_i: exchange sum, then exact right division by the old variable."""
    if not 1 <= i <= seed.pair.n:
        raise ValueError(f"direction {i} outside 1..{seed.pair.n}")
    idx = i - 1
    pair = seed.pair
    d_i = seed.exchange.d[idx]
    col = pair.column(i)
    if any(b % d_i for b in col):
        raise ValueError(f"d[{i}] stopped dividing column {i}")
    beta = tuple(b // d_i for b in col)
    bplus = positive_part(beta)
    bminus = positive_part(tuple(-x for x in beta))
    e_i = tuple(1 if l == idx else 0 for l in range(pair.m))

    total = seed.initial_ctx.zero()
    for r in range(d_i + 1):
        v_r = tuple(r * bplus[l] + (d_i - r) * bminus[l] for l in range(pair.m))
        qfac = QCoefficient.q_power(_skew(pair.lam, v_r, e_i))
        total = total + expand_current_monomial(seed, v_r) * (seed.exchange.h[idx][r] * qfac)
    try:
        newvar = t_right_divide_exact(total, seed.vars[idx])
    except NotDivisible as exc:
        raise LaurentViolation(
            f"mutation {i} of seed at word {seed.history} is not Laurent: {exc}"
        ) from exc

    newpair = mutate_pair(pair, i)
    _validate_exchange(newpair, seed.exchange)
    newvars = tuple(
        newvar if k == idx else v for k, v in enumerate(seed.vars)
    )
    return QuantumSeed(
        newpair, seed.exchange, seed.initial_ctx, newvars, seed.history + (i,)
    )


def apply_word(seed: QuantumSeed, word: list[int] | Vec) -> QuantumSeed:
    """Left-to-right composition of mutations."""
    for i in word:
        seed = mutate_seed(seed, int(i))
    return seed


def seed_equal(s1: QuantumSeed, s2: QuantumSeed) -> bool:
    """Strict equality: same current pair and identical variable expansions."""
    return (
        s1.initial_ctx == s2.initial_ctx
        and s1.pair.lam == s2.pair.lam
        and s1.pair.btilde == s2.pair.btilde
        and s1.vars == s2.vars
    )


# -- seed files --------------------------------------------------------------


def seed_from_json(obj: dict) -> QuantumSeed:
    """Build the initial seed described by a seed JSON object."""
    try:
        m, n = int(obj["m"]), int(obj["n"])
        lam = tuple(tuple(int(x) for x in row) for row in obj["lambda"])
        btilde = tuple(tuple(int(x) for x in row) for row in obj["btilde"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed seed object: {exc}") from exc
    if len(lam) != m or len(btilde) != m:
        raise DimensionMismatch("matrix sizes disagree with m")
    if any(len(row) != n for row in btilde):
        raise DimensionMismatch("btilde rows disagree with n")
    pair = CompatiblePair.from_matrices(lam, btilde)

    if "d" in obj and obj["d"] is not None:
        d = tuple(int(x) for x in obj["d"])
        if len(d) != n:
            raise DimensionMismatch("d must have length n")
    else:
        d = tuple(
            gcd(*(btilde[l][k] for l in range(m))) or 1 for k in range(n)
        )

    default = ExchangeData.default(d)
    fams = list(default.h)
    hobj = obj.get("h") or {}
    for key, strings in hobj.items():
        k = int(key)
        if not 1 <= k <= n:
            raise ValueError(f"h key {key} outside 1..{n}")
        fams[k - 1] = tuple(parse_coefficient(s) for s in strings)
    exchange = ExchangeData(d, tuple(fams))
    return QuantumSeed.initial(pair, exchange)


def seed_to_json(seed: QuantumSeed) -> dict:
    """Serialize the seed's current pair with its exchange data.

    The schema has no mutation history, so what is written is the re-rooted
    seed of the current cluster.
    """
    return {
        "m": seed.pair.m,
        "n": seed.pair.n,
        "lambda": [list(row) for row in seed.pair.lam],
        "btilde": [list(row) for row in seed.pair.btilde],
        "d": list(seed.exchange.d),
        "h": {
            str(k + 1): [str(c) for c in fam]
            for k, fam in enumerate(seed.exchange.h)
        },
    }


def load_seed(path: str) -> QuantumSeed:
    with open(path, encoding="utf-8") as fh:
        return seed_from_json(json.load(fh))
