"""The quantum torus T(Lambda): exact noncommutative Laurent arithmetic.

The ring has a free basis X(c), c in Z^m, over the coefficient ring, with

    X(c) * X(d) = q^(Lambda(c,d)/2) * X(c+d),          (multiplication)
    X(c) * X(d) = q^(Lambda(c,d)) * X(d) * X(c),       (commutation)

where Lambda(a,b) = a^T Lambda b for a fixed skew-symmetric integer matrix.
Division is one-sided and exact-or-error: a failed division never falls back
to the fraction skew-field, it raises NotDivisible.

>>> ctx = TorusContext(2, ((0, 1), (-1, 0)))
>>> x1, x2 = ctx.basis((1, 0)), ctx.basis((0, 1))
>>> print(x1 * x2)
q^(1/2)*X(1,1)
>>> print(t_right_divide_exact(ctx.basis((1, 1)), x2))
q^(-1/2)*X(1,0)
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coeff import DivisionByZero, NotDivisible, QCoefficient


class DimensionMismatch(ValueError):
    """A vector or matrix has the wrong size for this torus."""


class ContextMismatch(ValueError):
    """Operands belong to different torus contexts."""


Vec = tuple[int, ...]


@dataclass(frozen=True)
class TorusContext:
    """Dimension m and the skew-symmetric m x m matrix Lambda."""

    m: int
    lam: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        lam = tuple(tuple(int(x) for x in row) for row in self.lam)
        object.__setattr__(self, "lam", lam)
        if len(lam) != self.m or any(len(row) != self.m for row in lam):
            raise DimensionMismatch(f"lambda must be {self.m}x{self.m}")
        for i in range(self.m):
            for j in range(self.m):
                if lam[i][j] != -lam[j][i]:
                    raise ValueError(
                        f"lambda is not skew-symmetric at ({i + 1},{j + 1})"
                    )

    def skew(self, a: Vec, b: Vec) -> int:
        if len(a) != self.m or len(b) != self.m:
            raise DimensionMismatch(f"vectors must have length {self.m}")
        return sum(
            a[i] * self.lam[i][j] * b[j]
            for i in range(self.m)
            for j in range(self.m)
            if self.lam[i][j]
        )

    # -- element constructors ---------------------------------------------

    def zero(self) -> TorusElement:
        return TorusElement(self, {})

    def one(self) -> TorusElement:
        return self.basis((0,) * self.m)

    def basis(self, c: Vec | list[int]) -> TorusElement:
        c = tuple(int(x) for x in c)
        if len(c) != self.m:
            raise DimensionMismatch(f"exponent vector must have length {self.m}")
        return TorusElement(self, {c: QCoefficient.one()})

    def scalar(self, f: QCoefficient | int) -> TorusElement:
        f = QCoefficient._coerce(f)
        if f.is_zero():
            return self.zero()
        return TorusElement(self, {(0,) * self.m: f})


def skew_form(ctx: TorusContext, a: Vec, b: Vec) -> int:
    """a^T Lambda b; antisymmetric in (a, b)."""
    return ctx.skew(tuple(a), tuple(b))


@dataclass
class TorusElement:
    """Finite sum of QCoefficient * X(c) over a shared context.

    terms maps exponent vectors to nonzero coefficients; treated as
    immutable after construction.
    """

    ctx: TorusContext
    terms: dict[Vec, QCoefficient] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {c: f for c, f in self.terms.items() if not f.is_zero()}

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_invertible(self) -> bool:
        """Monomials with unit coefficient are exactly the units."""
        if len(self.terms) != 1:
            return False
        return next(iter(self.terms.values())).is_unit()

    def support(self) -> list[Vec]:
        return sorted(self.terms)

    def _check(self, other: TorusElement) -> None:
        if self.ctx != other.ctx:
            raise ContextMismatch("elements live in different quantum tori")

    # -- additive structure --------------------------------------------------

    def __add__(self, other: TorusElement) -> TorusElement:
        if not isinstance(other, TorusElement):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for c, f in other.terms.items():
            g = acc.get(c)
            acc[c] = f if g is None else g + f
        return TorusElement(self.ctx, acc)

    def __neg__(self) -> TorusElement:
        return TorusElement(self.ctx, {c: -f for c, f in self.terms.items()})

    def __sub__(self, other: TorusElement) -> TorusElement:
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self + (-other)

    # -- multiplicative structure ---------------------------------------------

    def __mul__(self, other: TorusElement | QCoefficient | int) -> TorusElement:
        if isinstance(other, (QCoefficient, int)):
            f = QCoefficient._coerce(other)
            return TorusElement(self.ctx, {c: g * f for c, g in self.terms.items()})
        if not isinstance(other, TorusElement):
            return NotImplemented
        self._check(other)
        acc: dict[Vec, QCoefficient] = {}
        for c, f in self.terms.items():
            for d, g in other.terms.items():
                key = tuple(a + b for a, b in zip(c, d))
                part = f * g * QCoefficient.q_power(self.ctx.skew(c, d))
                prev = acc.get(key)
                acc[key] = part if prev is None else prev + part
        return TorusElement(self.ctx, acc)

    def __rmul__(self, other: QCoefficient | int) -> TorusElement:
        if isinstance(other, (QCoefficient, int)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> TorusElement:
        if n < 0:
            if not self.is_monomial():
                raise NotDivisible("negative power of a non-monomial element")
            c, f = next(iter(self.terms.items()))
            if not f.is_unit():
                raise NotDivisible("negative power of a non-unit coefficient")
            base = TorusElement(
                self.ctx, {tuple(-x for x in c): f.unit_inverse()}
            )
            n = -n
        else:
            base = self
        out = self.ctx.one()
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    # -- substitution ----------------------------------------------------------

    def specialize(self, assignment: dict) -> TorusElement:
        """Apply QCoefficient.specialize to every coefficient."""
        return TorusElement(
            self.ctx, {c: f.specialize(assignment) for c, f in self.terms.items()}
        )

    # -- rendering ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        zero_vec = (0,) * self.ctx.m
        out: list[str] = []
        for c in sorted(self.terms):
            f = self.terms[c]
            xpart = "" if c == zero_vec else "X(" + ",".join(map(str, c)) + ")"
            sign = 1
            if len(f.terms) == 1:
                sign, coeff_body = f.signed_single()
                if not xpart:
                    body = coeff_body
                elif coeff_body == "1":
                    body = xpart
                else:
                    body = f"{coeff_body}*{xpart}"
            else:
                body = f"({f})*{xpart}" if xpart else f"({f})"
            if not out:
                out.append(f"-{body}" if sign < 0 else body)
            else:
                out.append(f" - {body}" if sign < 0 else f" + {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"TorusElement<{self}>"


# -- module-level operation names ------------------------------------------


def t_mul(a: TorusElement, b: TorusElement) -> TorusElement:
    """Product in the torus; bilinear extension of the basis law."""
    return a * b


def _entrywise_min(vectors: list[Vec]) -> Vec:
    return tuple(min(v[i] for v in vectors) for i in range(len(vectors[0])))


def _grlex(v: Vec) -> tuple[int, Vec]:
    return (sum(v), v)


def _divide_exact(n: TorusElement, d: TorusElement, right: bool) -> TorusElement:
    """Shared engine: solve Q*D = N (right=True) or D*Q = N (right=False).

    Both operands are shifted into the nonnegative orthant by basis-monomial
    units, then the forced leading term of the quotient is eliminated
    greedily under graded lex.  A candidate exponent outside the orthant or a
    failed coefficient division proves there is no exact quotient: for an
    exact quotient the entrywise-min slice of a product factors through the
    slices (the torus is a domain), pinning the quotient's support inside the
    orthant, and graded lex makes every leading term forced.
    """
    n._check(d)
    ctx = n.ctx
    if d.is_zero():
        raise DivisionByZero("torus division by zero")
    if n.is_zero():
        return ctx.zero()

    delta = _entrywise_min(list(d.terms))
    shift_d = ctx.basis(tuple(-x for x in delta))
    if right:
        dp, work = d * shift_d, n * shift_d
    else:
        dp, work = shift_d * d, shift_d * n
    alpha = _entrywise_min(list(work.terms))
    shift_a = ctx.basis(tuple(-x for x in alpha))
    work = shift_a * work if right else work * shift_a

    dlead = max(dp.terms, key=_grlex)
    dcoef = dp.terms[dlead]
    res = dict(work.terms)
    quo: dict[Vec, QCoefficient] = {}
    while res:
        nlead = max(res, key=_grlex)
        u = tuple(a - b for a, b in zip(nlead, dlead))
        if any(x < 0 for x in u):
            raise NotDivisible("quotient support leaves the Laurent orthant")
        base = res[nlead].divide_exact(dcoef)
        if right:
            c = base * QCoefficient.q_power(-ctx.skew(u, dlead))
        else:
            c = base * QCoefficient.q_power(-ctx.skew(dlead, u))
        prev = quo.get(u)
        quo[u] = c if prev is None else prev + c
        for v, g in dp.terms.items():
            key = tuple(a + b for a, b in zip(u, v))
            part = (
                c * g * QCoefficient.q_power(ctx.skew(u, v))
                if right
                else g * c * QCoefficient.q_power(ctx.skew(v, u))
            )
            w = res.get(key)
            w = -part if w is None else w - part
            if w.is_zero():
                res.pop(key, None)
            else:
                res[key] = w

    qpp = TorusElement(ctx, quo)
    unshift = ctx.basis(alpha)
    q = unshift * qpp if right else qpp * unshift
    check = q * d if right else d * q
    if check != n:
        raise NotDivisible("verification product mismatch")
    return q


def t_right_divide_exact(n: TorusElement, d: TorusElement) -> TorusElement:
    """Q with Q * d == n, re-verified by multiplication; else NotDivisible."""
    return _divide_exact(n, d, right=True)


def t_left_divide_exact(n: TorusElement, d: TorusElement) -> TorusElement:
    """Q with d * Q == n, re-verified by multiplication; else NotDivisible."""
    return _divide_exact(n, d, right=False)


def q_commutation_exponent(a: TorusElement, b: TorusElement) -> int | None:
    """Integer t with a*b == q^t * b*a, or None when no such integer exists."""
    if a.is_zero() or b.is_zero():
        return None
    if a.ctx != b.ctx:
        raise ContextMismatch("elements live in different quantum tori")
    p = a * b
    r = b * a
    if set(p.terms) != set(r.terms):
        return None
    c = next(iter(p.terms))
    try:
        ratio = p.terms[c].divide_exact(r.terms[c])
    except NotDivisible:
        return None
    if len(ratio.terms) != 1:
        return None
    (qexp, mon), v = next(iter(ratio.terms.items()))
    if mon or v != 1 or qexp % 2:
        return None
    t = qexp // 2
    if p != r * QCoefficient.q_power(2 * t):
        return None
    return t


def ordered_form(e: TorusElement) -> str:
    """Render as ordered monomials q^(.)*X1^(c1)*...*Xm^(cm).

    Each X(c) is rewritten through the identity
    X(c) = q^(S/2) * X1^(c1) * ... * Xm^(cm) with
    S = sum over l < k of c_l c_k lambda_{kl}.
    """
    if e.is_zero():
        return "0"
    m = e.ctx.m
    out: list[str] = []
    for c in sorted(e.terms):
        s = sum(
            c[l] * c[k] * e.ctx.lam[k][l] for k in range(m) for l in range(k)
        )
        f = e.terms[c] * QCoefficient.q_power(s)
        factors = []
        for k in range(m):
            if c[k] == 1:
                factors.append(f"X{k + 1}")
            elif c[k] > 1:
                factors.append(f"X{k + 1}^{c[k]}")
            elif c[k] < 0:
                factors.append(f"X{k + 1}^({c[k]})")
        xpart = "*".join(factors)
        sign = 1
        if not xpart:
            body = str(f) if len(f.terms) == 1 else f"({f})"
            if len(f.terms) == 1:
                sign, body = f.signed_single()
        elif len(f.terms) == 1:
            sign, coeff_body = f.signed_single()
            body = xpart if coeff_body == "1" else f"{coeff_body}*{xpart}"
        else:
            body = f"({f})*{xpart}"
        if not out:
            out.append(f"-{body}" if sign < 0 else body)
        else:
            out.append(f" - {body}" if sign < 0 else f" + {body}")
    return "".join(out)
