"""Integer Laurent polynomials in one variable ``q`` and Gaussian-integer ratios.

Everything here is exact: coefficients are Python ints, specializations are
``fractions.Fraction``.  Values are immutable and hashable.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "GaussRatio",
    "q",
    "ONE",
    "ZERO",
    "monomial",
    "gauss",
    "gauss_balanced",
    "gauss_factorial",
    "balanced_factorial",
    "cyclotomic",
    "cyclo_valuation",
    "bar",
    "bar_symmetric_split",
    "evaluate",
    "parse_poly",
]

Rational = Union[int, Fraction]


class LaurentPoly:
    """Finitely supported map ``exponent -> nonzero int``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._terms = tuple(sorted((e, c) for e, c in terms.items() if c))
        p._hash = None
        return p

    # -- basic accessors -------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def coeff(self, e: int) -> int:
        for k, c in self._terms:
            if k == e:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[0][0]

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[-1][0]

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def at_one(self) -> int:
        return sum(c for _, c in self._terms)

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly._raw({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly._raw(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if self.is_monomial() and abs(self._terms[0][1]) == 1:
                e, c = self._terms[0]
                return LaurentPoly._raw({e * k: c ** (-k)})
            raise ValueError("negative powers only for unit monomials")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms})

    def divmod(self, divisor: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Long division; the divisor's leading coefficient must be +-1."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead_e, lead_c = divisor._terms[-1]
        if abs(lead_c) != 1:
            raise ValueError("divisor must have unit leading coefficient")
        low = divisor._terms[0][0]
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        if not rem:
            return ZERO, ZERO
        floor = min(rem) - low  # quotient exponents never need to go below this
        while rem:
            top = max(rem)
            if top - lead_e < floor:
                break
            c = rem[top] * lead_c  # lead_c is its own inverse
            k = top - lead_e
            quot[k] = quot.get(k, 0) + c
            for e, d in divisor._terms:
                rem[e + k] = rem.get(e + k, 0) - c * d
                if rem[e + k] == 0:
                    del rem[e + k]
        return LaurentPoly._raw(quot), LaurentPoly._raw(rem)

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        quo, rem = self.divmod(divisor)
        if rem:
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return quo

    # -- comparisons / hashing ------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly._raw({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for idx, (e, c) in enumerate(self._terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def to_latex(self) -> str:
        return re.sub(r"q\^(-?\d+)", r"q^{\1}", str(self)).replace("*", "")


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
q = LaurentPoly({1: 1})


def monomial(e: int, c: int = 1) -> LaurentPoly:
    return LaurentPoly._raw({e: c})


_TERM = re.compile(r"^(?:(\d+)\*?)?(q(?:\^(-?\d+))?)?$")


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of ``str(LaurentPoly)``; also tolerates ``+ -`` and missing spaces."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    if s == "0":
        return ZERO
    if s[-1] in "+-^*":
        raise ValueError(f"dangling operator in {text!r}")
    # split at + or - that are not an exponent sign
    pieces = re.findall(r"[+-]*[^+-]+", s.replace("^-", "^~"))
    acc: dict[int, int] = {}
    for raw in pieces:
        piece = raw.replace("^~", "^-")
        sign = 1
        while piece and piece[0] in "+-":
            if piece[0] == "-":
                sign = -sign
            piece = piece[1:]
        m = _TERM.match(piece)
        if not piece or m is None or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse term {raw!r} in {text!r}")
        coef = int(m.group(1)) if m.group(1) is not None else 1
        if m.group(2) is None:
            e = 0
        else:
            e = int(m.group(3)) if m.group(3) is not None else 1
        acc[e] = acc.get(e, 0) + sign * coef
    return LaurentPoly(acc)


def gauss(n: int) -> LaurentPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``."""
    if n < 0:
        raise ValueError(f"gauss() needs n >= 0, got {n}")
    return LaurentPoly._raw({e: 1 for e in range(n)})


def gauss_balanced(n: int) -> LaurentPoly:
    """Symmetric quantum integer ``q^(n-1) + q^(n-3) + ... + q^(1-n)``."""
    if n < 0:
        raise ValueError(f"gauss_balanced() needs n >= 0, got {n}")
    return LaurentPoly._raw({e: 1 for e in range(1 - n, n, 2)})


def gauss_factorial(k: int) -> LaurentPoly:
    out = ONE
    for j in range(1, k + 1):
        out = out * gauss(j)
    return out


def balanced_factorial(k: int) -> LaurentPoly:
    out = ONE
    for j in range(1, k + 1):
        out = out * gauss_balanced(j)
    return out


@lru_cache(maxsize=None)
def cyclotomic(l: int) -> LaurentPoly:
    """l-th cyclotomic polynomial, by dividing ``q^l - 1`` by the proper divisors' factors."""
    if l < 1:
        raise ValueError(f"cyclotomic() needs l >= 1, got {l}")
    num = LaurentPoly._raw({l: 1, 0: -1})
    for d in range(1, l):
        if l % d == 0:
            num = num.exact_div(cyclotomic(d))
    return num


def bar(p: LaurentPoly) -> LaurentPoly:
    """Substitute ``q -> q^-1``."""
    return LaurentPoly._raw({-e: c for e, c in p.items()})


def bar_symmetric_split(c: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Split ``c = gamma + rest`` with ``gamma`` bar-invariant and ``rest`` in ``qZ[q]``."""
    g: dict[int, int] = {}
    for e, a in c.items():
        if e == 0:
            g[0] = g.get(0, 0) + a
        elif e < 0:
            g[e] = g.get(e, 0) + a
            g[-e] = g.get(-e, 0) + a
    gamma = LaurentPoly._raw(g)
    return gamma, c - gamma


def evaluate(p: LaurentPoly, r: Rational) -> Fraction:
    r = Fraction(r)
    if r == 0:
        raise ZeroDivisionError("cannot specialize q = 0")
    return sum((Fraction(c) * r**e for e, c in p.items()), Fraction(0))


@dataclass(frozen=True)
class GaussRatio:
    """``sign * q^qpower * prod [n]_q (numerator) / prod [n]_q (denominator)``.

    The numerator and denominator are stored as sorted tuples of ints >= 2;
    common entries and entries equal to 1 are cancelled on construction.
    """

    sign: int = 1
    qpower: int = 0
    numerator: tuple[int, ...] = field(default=())
    denominator: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        num = Counter(self.numerator)
        den = Counter(self.denominator)
        if any(k < 1 for k in num) or any(k < 1 for k in den):
            raise ValueError("Gaussian-integer entries must be >= 1")
        common = num & den
        num -= common
        den -= common
        # [1]_q = 1 carries no information
        del num[1], den[1]
        object.__setattr__(self, "numerator", tuple(sorted(num.elements())))
        object.__setattr__(self, "denominator", tuple(sorted(den.elements())))

    @classmethod
    def one(cls) -> "GaussRatio":
        return cls()

    def __mul__(self, other: "GaussRatio") -> "GaussRatio":
        return GaussRatio(
            self.sign * other.sign,
            self.qpower + other.qpower,
            self.numerator + other.numerator,
            self.denominator + other.denominator,
        )

    def inverse(self) -> "GaussRatio":
        return GaussRatio(self.sign, -self.qpower, self.denominator, self.numerator)

    def __truediv__(self, other: "GaussRatio") -> "GaussRatio":
        return self * other.inverse()

    def at_one(self) -> Fraction:
        out = Fraction(self.sign)
        for n in self.numerator:
            out *= n
        for n in self.denominator:
            out /= n
        return out

    def evaluate(self, r: Rational) -> Fraction:
        r = Fraction(r)
        out = Fraction(self.sign) * r**self.qpower
        for n in self.numerator:
            out *= evaluate(gauss(n), r)
        for n in self.denominator:
            d = evaluate(gauss(n), r)
            if d == 0:
                raise ZeroDivisionError(f"[{n}]_q vanishes at q = {r}")
            out /= d
        return out

    def polys(self) -> tuple[LaurentPoly, LaurentPoly]:
        """Numerator and denominator expanded to polynomials."""
        num = monomial(self.qpower, self.sign)
        for n in self.numerator:
            num = num * gauss(n)
        den = ONE
        for n in self.denominator:
            den = den * gauss(n)
        return num, den

    def __str__(self):
        def prod(xs):
            return "*".join(f"[{n}]" for n in xs) or "1"

        head = "-" if self.sign < 0 else ""
        qp = f"q^{self.qpower}*" if self.qpower else ""
        return f"{head}{qp}{prod(self.numerator)}/{prod(self.denominator)}"


def _poly_valuation(p: LaurentPoly, l: int) -> int:
    phi = cyclotomic(l)
    k = 0
    while True:
        quo, rem = p.divmod(phi)
        if rem:
            return k
        p = quo
        k += 1


def cyclo_valuation(x: LaurentPoly | GaussRatio, l: int) -> int:
    """Multiplicity of the l-th cyclotomic polynomial in ``x``.

    For a :class:`GaussRatio` this counts entries divisible by ``l``;
    ``Phi_l`` divides ``[n]_q`` exactly when ``l | n``.
    """
    if l < 2:
        raise ValueError(f"valuation needs l >= 2, got {l}")
    if isinstance(x, GaussRatio):
        return sum(1 for n in x.numerator if n % l == 0) - sum(
            1 for n in x.denominator if n % l == 0
        )
    if x.is_zero():
        raise ValueError("valuation of zero is undefined")
    return _poly_valuation(x, l)


def ratio_valuation_by_division(x: GaussRatio, l: int) -> int:
    """Same as ``cyclo_valuation(x, l)`` but via polynomial division; used as a cross-check."""
    num, den = x.polys()
    return _poly_valuation(num, l) - _poly_valuation(den, l)
