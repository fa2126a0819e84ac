"""Power factorizations of mutated variables and upper-bound membership.

The upper bound is the intersection of the initial Laurent torus with its n
one-step-mutated neighbours; membership is decided direction by direction
with the finite criterion from that intersection's proof: split an element by
its i-th exponent, and every negatively-indexed slice must be exactly
right-divisible by the matching V-power times a frozen monomial.

All operations here are defined against a root seed (variables are the basis
monomials of their own torus).  Mutated seeds are re-rooted internally; an
external element must already live in the root torus.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import NotDivisible, QCoefficient
from .linalg import kernel
from .seed import QuantumSeed, mutate_seed, positive_part
from .torus import ContextMismatch, TorusElement, t_right_divide_exact


Vec = tuple[int, ...]


def _root(seed: QuantumSeed) -> QuantumSeed:
    return seed if seed.is_root() else seed.reroot()


def _unit(m: int, idx: int) -> Vec:
    return tuple(1 if l == idx else 0 for l in range(m))


def v_power(seed: QuantumSeed, i: int, s: int) -> TorusElement:
    """V^s for direction i: product over k = 1..s of
    sum over l of q^((2k-1)*l*dtilde_i/(2 d_i)) h_{i,l} X(l*beta^i)."""
    return _vw_power(seed, i, s, w=False)


def w_power(seed: QuantumSeed, i: int, s: int) -> TorusElement:
    """W^s for direction i, mirrored exponents and X(-l*beta^i)."""
    return _vw_power(seed, i, s, w=True)


def _vw_power(seed: QuantumSeed, i: int, s: int, w: bool) -> TorusElement:
    if s < 0:
        raise ValueError("power must be nonnegative")
    root = _root(seed)
    ctx = root.initial_ctx
    idx = i - 1
    d_i = root.exchange.d[idx]
    dt_i = root.pair.dtilde[idx]
    # dtilde_i / d_i is an integer: it equals Lambda(beta^i, e_i), an entry of
    # an integer matrix product
    if dt_i % d_i:
        raise ValueError(f"d[{i}] does not divide dtilde[{i}]")
    ratio = dt_i // d_i
    col = root.pair.column(i)
    beta = tuple(b // d_i for b in col)
    acc = ctx.one()
    for k in range(1, s + 1):
        sign = (1 - 2 * k) if w else (2 * k - 1)
        fac = ctx.zero()
        for l in range(d_i + 1):
            step = tuple((-l if w else l) * x for x in beta)
            coeff = root.exchange.h[idx][l] * QCoefficient.q_power(sign * l * ratio)
            fac = fac + ctx.basis(step) * coeff
        acc = acc * fac
    return acc


def power_factorization_check(seed: QuantumSeed, i: int, s: int) -> bool:
    """(X'_i)^s == V^s * X(s[-b^i]_+ - s e_i) == W^s * X(s[b^i]_+ - s e_i)."""
    root = _root(seed)
    ctx = root.initial_ctx
    idx = i - 1
    xprime = mutate_seed(root, i).vars[idx]
    lhs = xprime**s
    b = root.pair.column(i)
    e_i = _unit(root.pair.m, idx)
    mv = tuple(s * x - s * e for x, e in zip(positive_part([-x for x in b]), e_i))
    mw = tuple(s * x - s * e for x, e in zip(positive_part(b), e_i))
    rhs_v = v_power(root, i, s) * ctx.basis(mv)
    rhs_w = w_power(root, i, s) * ctx.basis(mw)
    return lhs == rhs_v and lhs == rhs_w


@dataclass
class DirectionDecomposition:
    """Slices of an element by its exponent in one direction.

    buckets[j] has zero i-th exponent everywhere and the element equals
    sum over j of buckets[j] * X(j * e_i).
    """

    direction: int
    buckets: dict[int, TorusElement]
    ctx_unit: Vec

    def reassemble(self) -> TorusElement:
        some = next(iter(self.buckets.values()))
        ctx = some.ctx
        acc = ctx.zero()
        for j, part in self.buckets.items():
            acc = acc + part * ctx.basis(tuple(j * x for x in self.ctx_unit))
        return acc


def decompose_by_direction(
    seed: QuantumSeed, y: TorusElement, i: int
) -> DirectionDecomposition:
    """Bucket y by the i-th exponent; q-corrections keep reassembly exact."""
    root = _root(seed)
    ctx = root.initial_ctx
    if y.ctx != ctx:
        raise ContextMismatch("element does not live in the seed's root torus")
    idx = i - 1
    e_i = _unit(root.pair.m, idx)
    buckets: dict[int, TorusElement] = {}
    for c, f in y.terms.items():
        j = c[idx]
        cp = tuple(x - j * e for x, e in zip(c, e_i))
        je = tuple(j * e for e in e_i)
        part = TorusElement(ctx, {cp: f * QCoefficient.q_power(-ctx.skew(cp, je))})
        buckets[j] = buckets.get(j, ctx.zero()) + part
    return DirectionDecomposition(i, buckets, e_i)


def ub_local_member(seed: QuantumSeed, y: TorusElement, i: int) -> bool:
    """Membership in the ring with X_i^(-1) removed and X'_i adjoined:
    every bucket at a negative exponent -j must be right-divisible by
    V^j * X(j[-b^i]_+)."""
    root = _root(seed)
    ctx = root.initial_ctx
    dec = decompose_by_direction(root, y, i)
    b = root.pair.column(i)
    bminus = positive_part([-x for x in b])
    for j, part in dec.buckets.items():
        if j >= 0:
            continue
        s = -j
        div = v_power(root, i, s) * ctx.basis(tuple(s * x for x in bminus))
        try:
            t_right_divide_exact(part, div)
        except NotDivisible:
            return False
    return True


def ub_member(seed: QuantumSeed, y: TorusElement) -> bool:
    """Conjunction of ub_local_member over every mutable direction."""
    return all(ub_local_member(seed, y, i) for i in range(1, seed.pair.n + 1))


def coprime_check_rank2(seed: QuantumSeed) -> bool | None:
    """Search for a common non-invertible central divisor of the exchange
    products X_1 X'_1 and X_2 X'_2; None means undetermined.

    Central elements are exactly those supported on ker Lambda.  With trivial
    kernel they are scalars, and both exchange products contain a unit
    coefficient (the r = 0 exchange term has h_{i,0} = 1), so no common
    non-invertible scalar divisor can exist: the answer is True.  Otherwise
    candidates with kernel support are drawn from the products' own supports
    and verified by exact division; exhausting them yields None.
    """
    root = _root(seed)
    if root.pair.n != 2:
        return None
    ctx = root.initial_ctx
    lam = root.pair.lam
    products = [
        root.vars[i - 1] * mutate_seed(root, i).vars[i - 1] for i in (1, 2)
    ]
    if not kernel(lam):
        for p in products:
            assert any(f.is_unit() for f in p.terms.values())
        return True

    def in_kernel(v: Vec) -> bool:
        return all(
            sum(lam[r][c] * v[c] for c in range(len(v))) == 0
            for r in range(len(lam))
        )

    def divides(p: TorusElement, z: TorusElement) -> bool:
        try:
            t_right_divide_exact(p, z)
            return True
        except NotDivisible:
            return False

    candidates: list[TorusElement] = []
    for p in products:
        for s0 in sorted(p.terms):
            group = {
                tuple(a - b for a, b in zip(s, s0)): f
                for s, f in p.terms.items()
                if in_kernel(tuple(a - b for a, b in zip(s, s0)))
            }
            if len(group) >= 2:
                candidates.append(TorusElement(ctx, group))
    for z in candidates:
        if z.is_invertible():
            continue
        if all(divides(p, z) for p in products):
            return False
    return None
