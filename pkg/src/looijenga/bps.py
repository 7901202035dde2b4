"""Refined BPS invariants ``Omega_d(q)`` and genus-0 KP invariants.

``omega_q`` Moebius-inverts the log polynomials over the common divisors of
the class, normalised by the q-numbers of the boundary degrees, and then
certifies that the result lies in ``Z[q**(+-1/2)]``.  ``omega_q_via_open``
runs the same inversion from the open generating functions.
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import ClassLike, Family, boundary_degrees, is_zero_region, validate, winding_of
from .localgw import local_closed
from .loggw import log_poly
from .opengw import open_closed
from .qkernel import QExact, QRatio, divisors_common, eval_at_one, mobius, q_num, sign


class IntegralityViolation(ArithmeticError):
    """A quantity that must be an integer (polynomial) is not."""


def certify_integral(value: QRatio, what: str) -> QExact:
    if not value.is_laurent():
        raise IntegralityViolation(f"{what} is not a Laurent polynomial: {value}")
    poly = value.to_exact()
    if not poly.is_integral():
        raise IntegralityViolation(f"{what} has non-integer coefficients: {poly}")
    return poly


def omega_ratio(fam: Family, d: ClassLike) -> QRatio:
    """``Omega_d(q)`` before certification."""
    d = validate(fam, d)
    if is_zero_region(fam, d):
        return QRatio(0)
    l = fam.l
    total = QExact()
    for k in divisors_common(d):
        dk = d.divided(k)
        Dk = sum(boundary_degrees(fam, dk))
        term = log_poly(fam, dk).adams(k) * (sign(Dk + l) * mobius(k))
        if l == 3:
            term = term * q_num(k) * k
        total = total + term
    den = QExact.constant(1)
    for x in boundary_degrees(fam, d):
        den = den * q_num(x)
    return QRatio(total * q_num(1) * q_num(1), den)


def omega_q(fam: Family, d: ClassLike) -> QExact:
    """Certified integral Laurent polynomial ``Omega_d(q)``."""
    return certify_integral(omega_ratio(fam, d), f"Omega_{d} of {fam}")


def omega_q_via_open(fam: Family, d: ClassLike) -> QExact:
    """``Omega_d(q)`` rebuilt from the open invariants with fractional framing bookkeeping."""
    d = validate(fam, d)
    if is_zero_region(fam, d):
        return QExact()
    r = fam.isotropy()
    D = boundary_degrees(fam, d)
    total = QRatio(0)
    for k in divisors_common(d):
        dk = d.divided(k)
        Dk = boundary_degrees(fam, dk)
        s = sum(x * (ri + 1) for x, ri in zip(Dk[:-1], r))
        total = total + open_closed(fam, winding_of(fam, dk)).adams(k) * Fraction(sign(s) * mobius(k), k)
    pre = q_num(1) * q_num(1)
    den = QExact.constant(1)
    for x, ri in zip(D[:-1], r):
        pre = pre * (ri * x)
        den = den * q_num(x)
    return certify_integral(total * QRatio(pre, den), f"open-side Omega_{d} of {fam}")


def kp_genus0(fam: Family, d: ClassLike) -> int:
    """Moebius-inverted local invariant ``sum_k mu(k)/k**(4-l) N^loc_{d/k}``, certified integral."""
    d = validate(fam, d)
    if is_zero_region(fam, d):
        return 0
    total = Fraction(0)
    for k in divisors_common(d):
        total += Fraction(mobius(k), k ** (4 - fam.l)) * local_closed(fam, d.divided(k))
    if total.denominator != 1:
        raise IntegralityViolation(f"KP invariant of {fam} at {d} is {total}, not an integer")
    return total.numerator


def kp_from_omega(fam: Family, d: ClassLike) -> Fraction:
    return eval_at_one(omega_q(fam, d))
