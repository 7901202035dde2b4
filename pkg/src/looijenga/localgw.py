"""Genus-0 local invariants: closed forms and an equivariant-pairing oracle.

The oracle takes the ``1/z`` (or, for three boundary components, ``1/z**2``)
coefficient of the equivariant I-function as a class in
``H_T(Y)`` and pairs it against the point class using the inverse of the
Gram matrix ``eta**-1``.  The answer has to come out free of the torus
weights ``lambda_i``; anything else means a coefficient was mis-copied.

The ``1/z**2`` coefficient for the three-component family is used with the
roles of ``a`` and ``b`` exchanged relative to the way the I-function is
usually written down for it: with ``d . D_2 = (b-1) d0 + d1`` and
``d . D_3 = a d0`` only the exchanged version reproduces the psi-invariant,
and the unexchanged one even divides by zero at ``a = 1, d1 = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import sympy as sp

from .geometry import ClassLike, Family, Kind, is_zero_region, validate
from .qkernel import sign

LAMBDA = sp.symbols("lambda1 lambda2 lambda3")


class TranscriptionFault(ArithmeticError):
    """The pairing did not eliminate the equivariant parameters."""


# -- closed forms ----------------------------------------------------------------


def local_closed(fam: Family, d: ClassLike) -> Fraction:
    d = validate(fam, d)
    a, b = fam.a, fam.b
    if fam.kind is Kind.P1AB:
        (n,) = d
        return Fraction(sign(n * (a + b + 1)), n * n * (a + b)) * comb((a + b) * n, a * n)
    if is_zero_region(fam, d):
        return Fraction(0)
    d0, d1 = d
    if fam.kind is Kind.Y2:
        return Fraction(
            sign(d0 * (a + b) + d1) * factorial((a + b - 1) * d0 + d1 - 1),
            d0
            * factorial(d0 - d1)
            * factorial((a - 1) * d0 + d1)
            * factorial((b - 1) * d0 + d1),
        )
    return a * d0 * ((b - 1) * d0 + d1) * local_psi(fam, d)


def local_psi(fam: Family, d: ClassLike) -> Fraction:
    """One-point invariant with a psi class (three-component family)."""
    if fam.kind is not Kind.Y3:
        raise ValueError(f"local_psi is defined for the three-component family, not {fam}")
    d0, d1 = validate(fam, d)
    a, b = fam.a, fam.b
    return Fraction(
        sign(d0 * (a + b) + d1 + 1) * factorial(a * d0 - 1),
        d0 * ((b - 1) * d0 + d1) * factorial(d0 - d1) * factorial((a - 1) * d0 + d1),
    )


# -- equivariant cohomology -------------------------------------------------------


@dataclass(frozen=True)
class EquivariantClass:
    """Coordinates (sympy expressions in the weights) over a fixed basis.

    ``kind`` P1AB uses ``(1, H, H^2)``; Y2 and Y3 use ``(1, E, f, pt)``.
    """

    kind: Kind
    ab: int
    coords: tuple

    @classmethod
    def scalar(cls, kind: Kind, ab: int, c) -> "EquivariantClass":
        n = 3 if kind is Kind.P1AB else 4
        return cls(kind, ab, (sp.sympify(c),) + (sp.Integer(0),) * (n - 1))

    @classmethod
    def basis(cls, kind: Kind, ab: int, i: int) -> "EquivariantClass":
        n = 3 if kind is Kind.P1AB else 4
        return cls(kind, ab, tuple(sp.Integer(1 if k == i else 0) for k in range(n)))

    def _table(self):
        """Structure constants: products of degree-one basis elements."""
        if self.kind is Kind.P1AB:
            return {(1, 1): (2, 1)}
        # E^2 = -pt, E f = pt, f^2 = (ab - 1) pt
        return {(1, 1): (3, -1), (1, 2): (3, 1), (2, 1): (3, 1), (2, 2): (3, self.ab - 1)}

    def __add__(self, other):
        if not isinstance(other, EquivariantClass):
            other = EquivariantClass.scalar(self.kind, self.ab, other)
        return EquivariantClass(self.kind, self.ab, tuple(x + y for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return EquivariantClass(self.kind, self.ab, tuple(-x for x in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, EquivariantClass):
            other = sp.sympify(other)
            return EquivariantClass(self.kind, self.ab, tuple(x * other for x in self.coords))
        n = len(self.coords)
        top = n - 1
        out = [sp.Integer(0)] * n
        table = self._table()
        for i, x in enumerate(self.coords):
            if x == 0:
                continue
            for j, y in enumerate(other.coords):
                if y == 0:
                    continue
                if i == 0:
                    out[j] += x * y
                elif j == 0:
                    out[i] += x * y
                elif (i, j) in table:
                    k, c = table[(i, j)]
                    out[k] += c * x * y
                elif i == top or j == top:
                    continue
                else:
                    raise AssertionError("unreachable basis product")
        return EquivariantClass(self.kind, self.ab, tuple(sp.expand(c) for c in out))

    __rmul__ = __mul__


def eta_inverse(fam: Family) -> sp.Matrix:
    """Inverse Gram matrix of the equivariant Poincare pairing."""
    a, b = sp.Integer(fam.a), sp.Integer(fam.b)
    l1, l2, l3 = LAMBDA
    if fam.kind is Kind.P1AB:
        m = l1 * l2 / (a * b)
        off = -(a * l1 + b * l1 + l2) / (a**2 * b**2)
        return sp.Matrix([[0, 0, m], [0, m, off], [m, off, (a + b) / (a**3 * b**3)]])
    if fam.kind is Kind.Y2:
        L = l1 * l2
        e13 = -(-a * (b - 1) * l1 + b * l1 + l2) / (a * b)
        e23 = -(a * l1 + b * l1 + l2) / (a * b)
        return sp.Matrix(
            [
                [0, 0, 0, L],
                [0, -L * (a * b - 1) / (a * b), L / (a * b), e13],
                [0, L / (a * b), L / (a * b), e23],
                [L, e13, e23, 1 / a + 1 / b],
            ]
        )
    L = l1 * l2 * l3
    e13 = (b * l1 * (a * l3 - l2) - l3 * (a * l1 + l2)) / (a * b)
    e23 = -(l3 * (a * l1 + l2) + b * l1 * l2) / (a * b)
    return sp.Matrix(
        [
            [0, 0, 0, L],
            [0, -L * (a * b - 1) / (a * b), L / (a * b), e13],
            [0, L / (a * b), L / (a * b), e23],
            [L, e13, e23, l2 / a + l3 / b + l1],
        ]
    )


def _classes(fam: Family):
    kind, ab = fam.kind, fam.a * fam.b
    if kind is Kind.P1AB:
        return {"H": EquivariantClass.basis(kind, ab, 1)}
    E = EquivariantClass.basis(kind, ab, 1)
    f = EquivariantClass.basis(kind, ab, 2)
    p0 = (f + E) * sp.Rational(1, ab)
    return {"E": E, "f": f, "p0": p0, "p1": p0 - E}


def _class_factor(fam: Family) -> EquivariantClass:
    """The cohomology-valued (degree independent) part of the I-function coefficient."""
    a, b = fam.a, fam.b
    l1, l2, l3 = LAMBDA
    c = _classes(fam)
    if fam.kind is Kind.P1AB:
        H = c["H"]
        return (H - a * b * l1) * (H * (a + b) - a * b * l2)
    p0, p1 = c["p0"], c["p1"]
    if fam.kind is Kind.Y2:
        return (p0 - l1) * (p0 * (a + b - 1) - l2 + p1)
    # exchanged labelling, see the module docstring
    return (p0 - l1) * ((b - 1) * p0 - l2 + p1) * (a * p0 - l3)


def _scalar_factor(fam: Family, d) -> Fraction:
    """The degree-dependent Gamma-ratio prefactor of the I-function coefficient."""
    a, b = fam.a, fam.b
    if fam.kind is Kind.P1AB:
        (n,) = d
        return Fraction(
            sign(n * (a + b + 1)) * factorial((a + b) * n - 1),
            a * a * b * b * n * factorial(a * n) * factorial(b * n),
        )
    d0, d1 = d
    if fam.kind is Kind.Y2:
        return Fraction(
            factorial(d0 - 1) * sign(d0 * (a + b) + d1) * factorial((a + b - 1) * d0 + d1 - 1),
            factorial(d0)
            * factorial(d0 - d1)
            * factorial((a - 1) * d0 + d1)
            * factorial((b - 1) * d0 + d1),
        )
    return Fraction(
        sign(d0 * (a + b) + d1) * factorial(a * d0 - 1),
        d0 * ((b - 1) * d0 + d1) * factorial(d0 - d1) * factorial((a - 1) * d0 + d1),
    )


@lru_cache(maxsize=None)
def pairing_with_point(fam: Family) -> Fraction:
    """``eta(pt-slot, class factor)``; must be a rational number free of the weights.

    For P1AB the point class is ``H^2/(ab)``, which puts the extra ``1/(ab)``
    in front of the last row of ``eta``.
    """
    eta = eta_inverse(fam).inv()
    cls = _class_factor(fam)
    top = len(cls.coords) - 1
    val = sum(eta[top, i] * cls.coords[i] for i in range(top + 1))
    if fam.kind is Kind.P1AB:
        val = val / (fam.a * fam.b)
    val = sp.cancel(sp.together(val))
    if val.free_symbols:
        raise TranscriptionFault(f"{fam}: pairing depends on {sorted(map(str, val.free_symbols))}: {val}")
    return Fraction(int(sp.numer(val)), int(sp.denom(val)))


def local_oracle(fam: Family, d: ClassLike) -> Fraction:
    d = validate(fam, d)
    if is_zero_region(fam, d):
        return Fraction(0)
    value = _scalar_factor(fam, d) * pairing_with_point(fam)
    if fam.kind is Kind.Y3:
        d0, d1 = d
        value *= fam.a * d0 * ((fam.b - 1) * d0 + d1)
    return value
