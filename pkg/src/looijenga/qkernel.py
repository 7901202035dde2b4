"""Exact Laurent polynomials and rational functions in fractional powers of q.

A value lives on a lattice ``L``: every exponent is an integer ``e`` standing
for ``q**(e / (2L))``.  Writing ``u = q**(1/(2L))`` turns each value into
``u**low * P(u)`` with ``P`` an ordinary polynomial, which is what the FLINT
``fmpq_poly`` backend multiplies, divides and takes gcds of.  The lattice is
always the smallest one that represents the stored exponents, so structural
equality is mathematical equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Mapping, Union

import flint

Rational = Union[int, Fraction]

_POLY = flint.fmpq_poly
_X_MINUS_ONE = _POLY([-1, 1])


class NonExactDivision(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


class PoleAtOne(ArithmeticError):
    """Raised when a q -> 1 limit does not exist."""


def _fmpq(c: Rational) -> flint.fmpq:
    if isinstance(c, flint.fmpq):
        return c
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def _fraction(c) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _inflate(poly, t: int):
    if t == 1 or poly.is_zero():
        return poly
    coeffs = poly.coeffs()
    out = [0] * ((len(coeffs) - 1) * t + 1)
    for i, c in enumerate(coeffs):
        out[i * t] = c
    return _POLY(out)


def _deflate(poly, t: int):
    if t == 1 or poly.is_zero():
        return poly
    return _POLY(poly.coeffs()[::t])


def _deflation(poly) -> tuple[object, int]:
    """``(P, n)`` with ``poly(u) = P(u**n)`` and ``n`` maximal; ``n = 0`` for constants."""
    if poly.degree() <= 0:
        return poly, 0
    return poly.deflation()


def _strip_low(poly) -> tuple[int, object]:
    """Split ``poly`` as ``u**k * rest`` with ``rest(0) != 0``."""
    if poly[0] != 0:
        return 0, poly
    k = 1
    while poly[k] == 0:
        k += 1
    return k, poly.right_shift(k)


class QExact:
    """Laurent polynomial in ``q**(1/(2L))`` with rational coefficients."""

    __slots__ = ("lattice", "low", "poly", "_hash")

    def __init__(self, lattice: int = 1, terms: Mapping[int, Rational] | None = None):
        if lattice < 1:
            raise ValueError("lattice must be a positive integer")
        terms = {e: c for e, c in (terms or {}).items() if c != 0}
        if not terms:
            self._set(1, 0, _POLY([]))
            return
        low = min(terms)
        coeffs = [0] * (max(terms) - low + 1)
        for e, c in terms.items():
            coeffs[e - low] = _fmpq(c)
        self._set(lattice, low, _POLY(coeffs))
        self._canonicalize()

    def _set(self, lattice, low, poly):
        self.lattice = lattice
        self.low = low
        self.poly = poly
        self._hash = None

    @classmethod
    def _raw(cls, lattice: int, low: int, poly) -> "QExact":
        obj = cls.__new__(cls)
        obj._set(lattice, low, poly)
        obj._canonicalize()
        return obj

    def _canonicalize(self):
        if self.poly.is_zero():
            self._set(1, 0, self.poly)
            return
        k, rest = _strip_low(self.poly)
        low = self.low + k
        deflated, n = _deflation(rest)
        g = math.gcd(n, self.lattice, low)
        if g > 1:
            rest = deflated if g == n else _deflate(rest, g)
        self._set(self.lattice // g, low // g, rest)

    # -- constructors --------------------------------------------------------

    @classmethod
    def constant(cls, c: Rational) -> "QExact":
        return cls(1, {0: c})

    @classmethod
    def monomial(cls, exponent: Rational, coeff: Rational = 1) -> "QExact":
        """``coeff * q**exponent`` for a rational exponent."""
        exponent = Fraction(exponent)
        twice = 2 * exponent
        lattice = twice.denominator
        return cls(lattice, {twice.numerator: coeff})

    @classmethod
    def from_q_terms(cls, terms: Mapping[Rational, Rational]) -> "QExact":
        """Build from ``{exponent_in_q: coefficient}``."""
        out = cls()
        for e, c in terms.items():
            out = out + cls.monomial(e, c)
        return out

    # -- views ---------------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, Fraction]:
        """Map from integer exponent (unit ``1/(2L)``) to coefficient."""
        return {self.low + i: _fraction(c) for i, c in enumerate(self.poly.coeffs()) if c != 0}

    def q_terms(self) -> dict[Fraction, Fraction]:
        """Map from exponent of ``q`` (a rational) to coefficient."""
        return {Fraction(e, 2 * self.lattice): c for e, c in self.coeffs.items()}

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def is_constant(self) -> bool:
        return self.is_zero() or (self.low == 0 and self.poly.degree() == 0)

    def constant_term(self) -> Fraction:
        return self.coeffs.get(0, Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def is_monomial(self) -> bool:
        return not self.is_zero() and self.poly.degree() == 0

    def min_exponent(self) -> Fraction:
        return Fraction(self.low, 2 * self.lattice)

    def max_exponent(self) -> Fraction:
        return Fraction(self.low + self.poly.degree(), 2 * self.lattice)

    # -- lattice plumbing ----------------------------------------------------

    def on_lattice(self, lattice: int) -> tuple[int, object]:
        """``(low, poly)`` of this value rewritten on a multiple of its lattice."""
        t, r = divmod(lattice, self.lattice)
        if r:
            raise ValueError(f"lattice {lattice} is not a multiple of {self.lattice}")
        return self.low * t, _inflate(self.poly, t)

    @staticmethod
    def _common(x: "QExact", y: "QExact"):
        lattice = math.lcm(x.lattice, y.lattice)
        xl, xp = x.on_lattice(lattice)
        yl, yp = y.on_lattice(lattice)
        return lattice, xl, xp, yl, yp

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = as_qexact(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lattice, xl, xp, yl, yp = self._common(self, other)
        low = min(xl, yl)
        poly = xp.left_shift(xl - low) + yp.left_shift(yl - low)
        return QExact._raw(lattice, low, poly)

    __radd__ = __add__

    def __neg__(self):
        return QExact._raw(self.lattice, self.low, -self.poly)

    def __sub__(self, other):
        other = as_qexact(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QExact._raw(self.lattice, self.low, self.poly * _fmpq(other))
        other = as_qexact(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QExact()
        lattice, xl, xp, yl, yp = self._common(self, other)
        return QExact._raw(lattice, xl + yl, xp * yp)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        out = QExact.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return QRatio(self, other)

    def __rtruediv__(self, other):
        return QRatio(other, self)

    def exact_div(self, other: "QExact") -> "QExact":
        """Quotient that must be a Laurent polynomial; raises otherwise."""
        other = as_qexact(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return QExact()
        lattice, xl, xp, yl, yp = self._common(self, other)
        quot, rem = divmod(xp, yp)
        if not rem.is_zero():
            raise NonExactDivision("Laurent polynomial division is not exact")
        return QExact._raw(lattice, xl - yl, quot)

    def __eq__(self, other):
        if isinstance(other, QRatio):
            return other == self
        other = as_qexact(other)
        if other is NotImplemented:
            return NotImplemented
        return self.lattice == other.lattice and self.low == other.low and self.poly == other.poly

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.lattice, self.low, tuple(self.coeffs.items())))
        return self._hash

    # -- substitutions -------------------------------------------------------

    def adams(self, k: int) -> "QExact":
        """Substitute ``q -> q**k``."""
        if k < 1:
            raise ValueError("Adams operation needs k >= 1")
        return QExact._raw(self.lattice, self.low * k, _inflate(self.poly, k))

    def bar(self) -> "QExact":
        """Substitute ``q -> 1/q``."""
        if self.is_zero():
            return self
        coeffs = self.poly.coeffs()[::-1]
        return QExact._raw(self.lattice, -(self.low + len(coeffs) - 1), _POLY(coeffs))

    def is_symmetric(self) -> bool:
        return self == self.bar()

    def at_one(self) -> Fraction:
        return _fraction(self.poly(1)) if not self.is_zero() else Fraction(0)

    # -- formatting ----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "lattice": self.lattice,
            "terms": [[e, _fmt_rational(c)] for e, c in sorted(self.coeffs.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "QExact":
        return cls(int(data["lattice"]), {int(e): Fraction(c) for e, c in data["terms"]})

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in sorted(self.q_terms().items(), reverse=True):
            parts.append(_fmt_term(c, e))
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    def __repr__(self):
        return f"QExact({self})"


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_term(c: Fraction, e: Fraction) -> str:
    if e == 0:
        return _fmt_rational(c)
    if e == 1:
        mono = "q"
    elif e.denominator == 1 and e > 0:
        mono = f"q^{e.numerator}"
    else:
        mono = f"q^({_fmt_rational(e)})"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{_fmt_rational(c)}*{mono}"


def as_qexact(x) -> QExact:
    if isinstance(x, QExact):
        return x
    if isinstance(x, (int, Fraction)):
        return QExact.constant(x)
    return NotImplemented


class QRatio:
    """Quotient of two :class:`QExact` values kept in lowest terms.

    Canonical form: numerator and denominator share the smallest common
    lattice, are coprime as polynomials in the lattice variable, and the
    denominator is a polynomial with constant term 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = as_qexact(num)
        den = as_qexact(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("QRatio needs QExact, int or Fraction arguments")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _reduce(num, den)

    @classmethod
    def _trusted(cls, num: QExact, den: QExact) -> "QRatio":
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    def is_laurent(self) -> bool:
        return self.den.is_monomial() and self.den.low == 0

    def to_exact(self) -> QExact:
        if not self.is_laurent():
            raise NonExactDivision(f"{self} is not a Laurent polynomial")
        return self.num * (1 / self.den.constant_term())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = as_qratio(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return QRatio(self.num + other.num, self.den)
        g = _poly_gcd(self.den, other.den)
        sd = self.den.exact_div(g)
        od = other.den.exact_div(g)
        return QRatio(self.num * od + other.num * sd, sd * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRatio._trusted(-self.num, self.den)

    def __sub__(self, other):
        other = as_qratio(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return QRatio(0)
            return QRatio._trusted(self.num * other, self.den)
        other = as_qratio(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QRatio(0)
        # cross-cancel first so the operands stay small
        g1 = _poly_gcd(self.num, other.den)
        g2 = _poly_gcd(other.num, self.den)
        num = self.num.exact_div(g1) * other.num.exact_div(g2)
        den = self.den.exact_div(g2) * other.den.exact_div(g1)
        return QRatio(num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_qratio(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_qratio(other) / self

    def inverse(self) -> "QRatio":
        return QRatio(self.den, self.num)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return QRatio(self.num**n, self.den**n)

    def __eq__(self, other):
        other = as_qratio(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def adams(self, k: int) -> "QRatio":
        return QRatio(self.num.adams(k), self.den.adams(k))

    def bar(self) -> "QRatio":
        return QRatio(self.num.bar(), self.den.bar())

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __str__(self):
        if self.den == QExact.constant(1):
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"QRatio({self})"


def as_qratio(x) -> QRatio:
    if isinstance(x, QRatio):
        return x
    if isinstance(x, (QExact, int, Fraction)):
        return QRatio(x)
    return NotImplemented


def _poly_gcd(x: QExact, y: QExact) -> QExact:
    """Monic gcd of the polynomial parts, as a QExact on the common lattice."""
    lattice, _, xp, _, yp = QExact._common(x, y)
    return QExact._raw(lattice, 0, xp.gcd(yp))


def _reduce(num: QExact, den: QExact) -> tuple[QExact, QExact]:
    if num.is_zero():
        return QExact(), QExact.constant(1)
    lattice, nl, np_, dl, dp = QExact._common(num, den)
    g = np_.gcd(dp)
    if not g.is_one():
        np_ = np_ // g
        dp = dp // g
    scale = dp.coeffs()[0]
    np_ = np_ / scale
    dp = dp / scale
    # jointly shrink the lattice
    step = math.gcd(_deflation(np_)[1], _deflation(dp)[1], lattice, nl - dl)
    n = QExact.__new__(QExact)
    n._set(lattice // step, (nl - dl) // step, _deflate(np_, step))
    n._canonicalize()
    d = QExact.__new__(QExact)
    d._set(lattice // step, 0, _deflate(dp, step))
    d._canonicalize()
    return n, d


# -- q-numbers and friends ----------------------------------------------------


def q_num(n: Rational) -> QExact:
    """``[n]_q = q**(n/2) - q**(-n/2)``; ``n`` may be a nonnegative rational."""
    n = Fraction(n)
    if n < 0:
        raise ValueError("q_num needs n >= 0")
    if n == 0:
        return QExact()
    return QExact.monomial(n / 2) - QExact.monomial(-n / 2)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QExact:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = QExact.constant(1)
    for i in range(1, n + 1):
        out = out * q_num(i)
    return out


@lru_cache(maxsize=None)
def _pochhammer_poly(n: int):
    out = _POLY([1])
    for k in range(1, n + 1):
        out = out * _POLY([1] + [0] * (k - 1) + [-1])
    return out


def q_pochhammer(n: int) -> QExact:
    """``(q;q)_n = prod_{k=1..n} (1 - q**k)``."""
    if n < 0:
        raise ValueError("q_pochhammer needs n >= 0")
    return QExact._raw(1, 0, _inflate(_pochhammer_poly(n), 2))


@lru_cache(maxsize=None)
def q_binomial(n: int, m: int) -> QExact:
    """Balanced q-binomial ``[n]_q! / ([m]_q! [n-m]_q!)``, symmetric in q <-> 1/q."""
    if n < 0 or m < 0 or m > n:
        raise ValueError(f"q_binomial needs 0 <= m <= n, got ({n}, {m})")
    quot, rem = divmod(_pochhammer_poly(n), _pochhammer_poly(m) * _pochhammer_poly(n - m))
    if not rem.is_zero():
        raise NonExactDivision("q-binomial division left a remainder")
    # Gaussian polynomial in q, recentred by q**(-m(n-m)/2); lattice variable q**(1/2)
    return QExact._raw(1, -m * (n - m), _inflate(quot, 2))


def adams(f, k: int):
    """``q -> q**k`` on a QExact or QRatio."""
    return f.adams(k)


def eval_at_one(f) -> Fraction:
    """Exact limit ``q -> 1`` of a QExact or QRatio."""
    if isinstance(f, (int, Fraction)):
        return Fraction(f)
    if isinstance(f, QExact):
        return f.at_one()
    lattice, _, num, _, den = QExact._common(f.num, f.den)
    while den(1) == 0:
        if den.is_zero():
            raise PoleAtOne("zero denominator")
        if num(1) != 0:
            raise PoleAtOne(f"{f} has a pole at q = 1")
        num = num // _X_MINUS_ONE
        den = den // _X_MINUS_ONE
    return _fraction(num(1)) / _fraction(den(1))


def sign(n: Rational) -> int:
    """``(-1)**n`` for an integral ``n``; rejects fractional exponents."""
    n = Fraction(n)
    if n.denominator != 1:
        raise ValueError(f"(-1)**({n}) is undefined for a fractional exponent")
    return -1 if n.numerator % 2 else 1


# -- hbar expansion -------------------------------------------------------------


@dataclass(frozen=True)
class HbarSeries:
    """Truncated expansion of a Laurent polynomial at ``q = exp(i hbar)``.

    ``even_part[k]`` is the coefficient of ``hbar**(2k)`` of the real part;
    ``odd_part[k]`` the coefficient of ``hbar**(2k+1)`` of the imaginary part
    (the factor ``i`` is stripped).  Terms above ``hbar**order`` are dropped.
    """

    order: int
    even_part: tuple[Fraction, ...]
    odd_part: tuple[Fraction, ...]

    def coefficient(self, n: int) -> Fraction:
        """Coefficient of ``hbar**n`` in the real (n even) or imaginary (n odd) channel."""
        if n < 0 or n > self.order:
            raise IndexError(n)
        part = self.even_part if n % 2 == 0 else self.odd_part
        return part[n // 2]

    def __mul__(self, other: "HbarSeries") -> "HbarSeries":
        order = min(self.order, other.order)
        a = _dense(self)
        b = _dense(other)
        # (A + iB)(C + iD) = (AC - BD) + i(AD + BC), A, C even, B, D odd
        re = [Fraction(0)] * (order + 1)
        im = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            for j in range(order + 1 - i):
                prod = a[i] * b[j]
                if prod == 0:
                    continue
                if i % 2 == 0 and j % 2 == 0:
                    re[i + j] += prod
                elif i % 2 == 1 and j % 2 == 1:
                    re[i + j] -= prod
                else:
                    im[i + j] += prod
        return HbarSeries(
            order,
            tuple(re[n] for n in range(0, order + 1, 2)),
            tuple(im[n] for n in range(1, order + 1, 2)),
        )


def _dense(s: HbarSeries) -> list[Fraction]:
    out = [Fraction(0)] * (s.order + 1)
    for k, c in enumerate(s.even_part):
        out[2 * k] = c
    for k, c in enumerate(s.odd_part):
        out[2 * k + 1] = c
    return out


def hbar_expand(f: QExact, order: int) -> HbarSeries:
    """Taylor data of ``f(exp(i hbar))`` up to ``hbar**order``."""
    if order < 0:
        raise ValueError("order must be >= 0")
    even = [Fraction(0)] * (order // 2 + 1)
    odd = [Fraction(0)] * ((order + 1) // 2)
    for x, c in f.q_terms().items():
        power = Fraction(1)
        for n in range(order + 1):
            term = c * power / math.factorial(n)
            # i**n splits into the real (n even) and imaginary (n odd) channels
            sgn = -1 if (n // 2) % 2 else 1
            if n % 2 == 0:
                even[n // 2] += sgn * term
            else:
                odd[n // 2] += sgn * term
            power *= x
    return HbarSeries(order, tuple(even), tuple(odd))


# -- elementary number theory -----------------------------------------------------


def mobius(k: int) -> int:
    if k < 1:
        raise ValueError("mobius needs k >= 1")
    result = 1
    p = 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            result = -result
        p += 1
    return -result if k > 1 else result


def divisors_common(d: Iterable[int]) -> list[int]:
    """All ``k >= 1`` dividing every component of ``d``, ascending."""
    d = list(d)
    if not d or all(x == 0 for x in d):
        raise ValueError("zero degree vector has no well-defined divisors")
    g = reduce(math.gcd, (abs(x) for x in d))
    return [k for k in range(1, g + 1) if g % k == 0]
