"""Exact arithmetic in the coefficient ring Z[H][q^(1/2), q^(-1/2)].

Elements are Laurent polynomials in q^(1/2) whose coefficients are integer
polynomials in a finite set H of formal commuting symbols h[k,r].  The
exponent of q^(1/2) is stored directly as an integer (``qexp``), so the
half-integer powers of q that appear throughout never need rationals:
``qexp = 3`` means q^(3/2), ``qexp = -2`` means q^(-1).

>>> a = QCoefficient.q_power(1) + QCoefficient.h_symbol(1, 1)
>>> print(a * a)
q + 2*h[1,1]*q^(1/2) + h[1,1]^2
>>> print((a * a).divide_exact(a))
q^(1/2) + h[1,1]
"""

from __future__ import annotations

from dataclasses import dataclass, field


class DivisionByZero(ZeroDivisionError):
    """Exact division was asked for a zero divisor."""


class NotDivisible(ArithmeticError):
    """No exact quotient exists in the ring."""


class MissingAssignment(KeyError):
    """specialize() met a symbol the assignment does not cover."""


# An H-symbol is a pair (k, r), printed h[k,r].  A monomial in the symbols is
# a tuple of ((k, r), exponent) pairs, sorted by symbol, exponents > 0; the
# empty tuple is the monomial 1.
HSym = tuple[int, int]
HMon = tuple[tuple[HSym, int], ...]

_H_ONE: HMon = ()


def _hmon_mul(a: HMon, b: HMon) -> HMon:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for sym, e in b:
        acc[sym] = acc.get(sym, 0) + e
    return tuple(sorted(acc.items()))


def _hmon_str(mon: HMon) -> str:
    parts = []
    for (k, r), e in mon:
        parts.append(f"h[{k},{r}]" if e == 1 else f"h[{k},{r}]^{e}")
    return "*".join(parts)


def _q_str(qexp: int) -> str:
    # qexp counts powers of q^(1/2)
    if qexp == 0:
        return "1"
    if qexp % 2 == 0:
        j = qexp // 2
        if j == 1:
            return "q"
        return f"q^{j}" if j > 0 else f"q^({j})"
    return f"q^({qexp}/2)"


def _term_str(qexp: int, mon: HMon, value: int) -> str:
    """Render |value| * mon * q-power; the caller handles the sign."""
    pieces = []
    v = abs(value)
    if v != 1 or (not mon and qexp == 0):
        pieces.append(str(v))
    if mon:
        pieces.append(_hmon_str(mon))
    if qexp != 0:
        pieces.append(_q_str(qexp))
    return "*".join(pieces)


@dataclass
class QCoefficient:
    """A canonical finite sum of terms value * h-monomial * q^(qexp/2).

    terms maps ``(qexp, hmon) -> value`` with no zero values stored; the
    empty map is zero.  Instances are treated as immutable.
    """

    terms: dict[tuple[int, HMon], int] = field(default_factory=dict)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> QCoefficient:
        return QCoefficient({})

    @staticmethod
    def one() -> QCoefficient:
        return QCoefficient({(0, _H_ONE): 1})

    @staticmethod
    def from_int(n: int) -> QCoefficient:
        return QCoefficient({(0, _H_ONE): n} if n else {})

    @staticmethod
    def q_power(qexp: int) -> QCoefficient:
        """The unit q^(qexp/2); q_power(2) is q itself."""
        return QCoefficient({(qexp, _H_ONE): 1})

    @staticmethod
    def h_symbol(k: int, r: int) -> QCoefficient:
        return QCoefficient({(0, (((k, r), 1),)): 1})

    @staticmethod
    def _coerce(x: QCoefficient | int) -> QCoefficient:
        if isinstance(x, QCoefficient):
            return x
        return QCoefficient.from_int(x)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0, _H_ONE): 1}

    def is_unit(self) -> bool:
        """True iff invertible in the ring, i.e. a single term ±q^(j/2)."""
        if len(self.terms) != 1:
            return False
        (qexp, mon), v = next(iter(self.terms.items()))
        return mon == _H_ONE and v in (1, -1)

    def is_nonneg(self) -> bool:
        """True iff every stored integer is >= 0."""
        return all(v >= 0 for v in self.terms.values())

    def symbols(self) -> set[HSym]:
        out: set[HSym] = set()
        for _, mon in self.terms:
            out.update(sym for sym, _ in mon)
        return out

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: QCoefficient | int) -> QCoefficient:
        if isinstance(other, int):
            other = QCoefficient.from_int(other)
        elif not isinstance(other, QCoefficient):
            return NotImplemented
        acc = dict(self.terms)
        for key, v in other.terms.items():
            w = acc.get(key, 0) + v
            if w:
                acc[key] = w
            else:
                acc.pop(key, None)
        return QCoefficient(acc)

    __radd__ = __add__

    def __neg__(self) -> QCoefficient:
        return QCoefficient({key: -v for key, v in self.terms.items()})

    def __sub__(self, other: QCoefficient | int) -> QCoefficient:
        if isinstance(other, int):
            other = QCoefficient.from_int(other)
        elif not isinstance(other, QCoefficient):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> QCoefficient:
        return QCoefficient.from_int(other) + (-self)

    def __mul__(self, other: QCoefficient | int) -> QCoefficient:
        if isinstance(other, int):
            other = QCoefficient.from_int(other)
        elif not isinstance(other, QCoefficient):
            return NotImplemented
        acc: dict[tuple[int, HMon], int] = {}
        for (qa, ma), va in self.terms.items():
            for (qb, mb), vb in other.terms.items():
                key = (qa + qb, _hmon_mul(ma, mb))
                w = acc.get(key, 0) + va * vb
                if w:
                    acc[key] = w
                else:
                    acc.pop(key, None)
        return QCoefficient(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QCoefficient:
        if n < 0:
            if not self.is_unit():
                raise NotDivisible("negative power of a non-unit coefficient")
            (qexp, _), v = next(iter(self.terms.items()))
            base = QCoefficient({(-qexp, _H_ONE): v})
            n = -n
        else:
            base = self
        out = QCoefficient.one()
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def unit_inverse(self) -> QCoefficient:
        """Inverse of a unit ±q^(j/2)."""
        return self ** (-1)

    # -- exact division ----------------------------------------------------

    def divide_exact(self, other: QCoefficient | int) -> QCoefficient:
        """Return c with c * other == self, else raise NotDivisible.

        Greedy leading-term elimination under graded lex after shifting both
        q-supports to start at 0 (q^(1/2) is a unit, so the shift is free).
        Over the integral domain Z the leading term of an exact quotient is
        forced at each step, so any failed step proves non-divisibility.

        >>> qq = QCoefficient.q_power
        >>> print((qq(2) - qq(-2)).divide_exact(qq(1) - qq(-1)))
        q^(-1/2) + q^(1/2)
        """
        other = QCoefficient._coerce(other)
        if other.is_zero():
            raise DivisionByZero("coefficient division by zero")
        if self.is_zero():
            return QCoefficient.zero()

        nshift = min(q for q, _ in self.terms)
        dshift = min(q for q, _ in other.terms)
        syms = sorted(self.symbols() | other.symbols())
        pos = {s: i for i, s in enumerate(syms)}

        def vec(qexp: int, mon: HMon, shift: int) -> tuple[int, ...]:
            v = [qexp - shift] + [0] * len(syms)
            for sym, e in mon:
                v[1 + pos[sym]] = e
            return tuple(v)

        def grlex(v: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
            return (sum(v), v)

        num = {vec(q, m, nshift): c for (q, m), c in self.terms.items()}
        den = {vec(q, m, dshift): c for (q, m), c in other.terms.items()}
        dlead = max(den, key=grlex)
        dval = den[dlead]

        quo: dict[tuple[int, ...], int] = {}
        while num:
            nlead = max(num, key=grlex)
            step = tuple(a - b for a, b in zip(nlead, dlead))
            if any(e < 0 for e in step):
                raise NotDivisible("leading monomial not divisible")
            c, rem = divmod(num[nlead], dval)
            if rem:
                raise NotDivisible("leading coefficient not divisible")
            quo[step] = c
            for dv, val in den.items():
                key = tuple(a + b for a, b in zip(step, dv))
                w = num.get(key, 0) - c * val
                if w:
                    num[key] = w
                else:
                    num.pop(key, None)

        out: dict[tuple[int, HMon], int] = {}
        for v, c in quo.items():
            mon = tuple((syms[i], e) for i, e in enumerate(v[1:]) if e)
            out[(v[0] + nshift - dshift, mon)] = c
        result = QCoefficient(out)
        if result * other != self:
            raise NotDivisible("verification product mismatch")
        return result

    # -- substitution ------------------------------------------------------

    def specialize(self, assignment: dict[HSym, QCoefficient | int]) -> QCoefficient:
        """Substitute symbol-free coefficients for every h-symbol occurring here.

        >>> c = QCoefficient.one() + QCoefficient.h_symbol(1, 1) * QCoefficient.q_power(1)
        >>> print(c.specialize({(1, 1): 2}))
        1 + 2*q^(1/2)
        """
        values: dict[HSym, QCoefficient] = {}
        for sym, val in assignment.items():
            val = QCoefficient._coerce(val)
            if val.symbols():
                raise ValueError("assignment values must be symbol-free")
            values[sym] = val
        acc = QCoefficient.zero()
        for (qexp, mon), v in self.terms.items():
            part = QCoefficient({(qexp, _H_ONE): v})
            for sym, e in mon:
                if sym not in values:
                    raise MissingAssignment(f"no value for h[{sym[0]},{sym[1]}]")
                part = part * values[sym] ** e
            acc = acc + part
        return acc

    def q_one_value(self) -> int:
        """Integer value at q^(1/2) = 1; requires a symbol-free coefficient."""
        if self.symbols():
            raise MissingAssignment("coefficient still carries h-symbols")
        return sum(self.terms.values())

    # -- rendering ---------------------------------------------------------

    def _sorted_terms(self) -> list[tuple[tuple[int, HMon], int]]:
        # h-free terms first, then by h-monomial, then by q-exponent
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def signed_single(self) -> tuple[int, str]:
        """(sign, body) of a single-term coefficient, body rendered positive."""
        if len(self.terms) != 1:
            raise ValueError("not a single-term coefficient")
        (qexp, mon), v = next(iter(self.terms.items()))
        return (1 if v > 0 else -1), _term_str(qexp, mon, v)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for (qexp, mon), v in self._sorted_terms():
            body = _term_str(qexp, mon, v)
            if not out:
                out.append(f"-{body}" if v < 0 else body)
            else:
                out.append(f" - {body}" if v < 0 else f" + {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"QCoefficient<{self}>"
