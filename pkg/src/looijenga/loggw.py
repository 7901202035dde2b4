"""All-genus log invariants as Laurent polynomials in ``q**(1/2)``.

``log_poly`` returns the closed-form generating polynomial; its ``q -> 1``
value is the genus-0 invariant and the expansion at ``q = exp(i hbar)``
gives the higher-genus corrections.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .geometry import ClassLike, Family, Kind, is_zero_region, validate
from .qkernel import QExact, hbar_expand, q_binomial, q_num


def log_poly(fam: Family, d: ClassLike) -> QExact:
    d = validate(fam, d)
    a, b = fam.a, fam.b
    if fam.kind is Kind.P1AB:
        (n,) = d
        return q_binomial((a + b) * n, a * n)
    if is_zero_region(fam, d):
        return QExact()
    d0, d1 = d
    if fam.kind is Kind.Y2:
        return q_binomial(a * d0, d0 - d1) * q_binomial((a + b - 1) * d0 + d1, a * d0)
    n = a * d0 * ((b - 1) * d0 + d1)
    return q_num(n).exact_div(q_num(1)) * q_binomial(a * d0, d0 - d1)


def log_psi(fam: Family, d: ClassLike) -> int:
    """Genus-0 invariant with a psi-class point insertion (three-component family only)."""
    if fam.kind is not Kind.Y3:
        raise ValueError(f"log_psi is defined for the three-component family, not {fam}")
    d0, d1 = validate(fam, d)
    return comb(fam.a * d0, d0 - d1)


def log_classical(fam: Family, d: ClassLike) -> int:
    """Classical-limit binomial expression for ``log_poly(q = 1)``."""
    d = validate(fam, d)
    a, b = fam.a, fam.b
    if fam.kind is Kind.P1AB:
        return comb((a + b) * d[0], a * d[0])
    if is_zero_region(fam, d):
        return 0
    d0, d1 = d
    if fam.kind is Kind.Y2:
        return comb(a * d0, d0 - d1) * comb((a + b - 1) * d0 + d1, a * d0)
    return a * d0 * ((b - 1) * d0 + d1) * comb(a * d0, d0 - d1)


def genus_coefficients(fam: Family, d: ClassLike, g_max: int) -> list[Fraction]:
    """``N_{g,d}`` for ``g = 0..g_max``.

    The generating polynomial equals ``(2 sin(hbar/2))**(2-l) sum_g N_g hbar**(2g-2+l)``,
    so for ``l = 2`` the coefficients sit in the real channel and for
    ``l = 3`` one first multiplies by ``[1]_q`` (which is ``2 i sin(hbar/2)``)
    and reads the imaginary channel.
    """
    poly = log_poly(fam, d)
    if fam.l == 2:
        series = hbar_expand(poly, 2 * g_max)
        return [series.coefficient(2 * g) for g in range(g_max + 1)]
    series = hbar_expand(q_num(1) * poly, 2 * g_max + 1)
    return [series.coefficient(2 * g + 1) for g in range(g_max + 1)]
