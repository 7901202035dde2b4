"""All-genus one-boundary open invariants of the three open geometries.

Winding data is ``(j,)`` for P1AB, ``(j, l)`` for Y2 (winding ``j`` and
degree ``l`` along the compact curve) and ``(j1, j2)`` for Y3.

Single-winding extraction only needs characters on the full cycle, which are
``(-1)**s`` on the hook ``(j - s, 1**s)`` and vanish elsewhere; every sum
below runs over hooks with weight ``(-1)**s / j``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .geometry import Family, Kind, NotInImage, as_class, boundary_degrees, validate, winding_of
from .loggw import log_poly
from .partitions import (
    EMPTY,
    Partition,
    as_partition,
    kappa,
    partitions_of,
    schur_hook_principal,
    schur_principal,
    schur_skew_hook_principal,
    skew_schur_jt,
)
from .qkernel import QExact, QRatio, eval_at_one, q_binomial, q_factorial, q_num, q_pochhammer, sign


def _qbinom_or_zero(n: int, m: int) -> QExact:
    if m < 0 or n < 0 or m > n:
        return QExact()
    return q_binomial(n, m)


def _as_integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NotInImage(f"{what} = {x} is not an integer; winding not in the image")
    return x.numerator


def _windings(fam: Family, w) -> tuple[int, ...]:
    w = tuple(as_class(w))
    expected = 1 if fam.kind is Kind.P1AB else 2
    if len(w) != expected:
        raise NotInImage(f"{fam} takes {expected} winding entries, got {w}")
    if w[0] < 1 or any(x < 0 for x in w):
        raise NotInImage(f"windings must be positive, got {w}")
    if fam.kind is Kind.Y3 and w[1] < 1:
        raise NotInImage(f"second winding must be positive, got {w}")
    r = fam.a if fam.kind is not Kind.Y3 else fam.b
    if w[0] % r:
        raise NotInImage(f"winding {w[0]} is not a multiple of {r}")
    return w


# -- closed forms ----------------------------------------------------------------


def open_closed(fam: Family, w) -> QRatio:
    w = _windings(fam, w)
    a, b = fam.a, fam.b
    if fam.kind is Kind.P1AB:
        (j,) = w
        d = j // a
        return QRatio(q_binomial((a + b) * d, a * d) * sign(d * b), q_num((a + b) * d) * (d * a))
    if fam.kind is Kind.Y2:
        j, l_ = w
        bj = b * j // a
        num = _qbinom_or_zero(bj + l_, j) * _qbinom_or_zero(j, l_)
        if num.is_zero():
            return QRatio(0)
        return QRatio(num * sign(bj + j + l_), q_num(bj + l_) * j)
    j1, j2 = w
    aj = a * j1 // b
    num = _qbinom_or_zero(aj, j1 - j2) * q_num(aj * j2)
    if num.is_zero():
        return QRatio(0)
    return QRatio(num * sign(j1 + aj + j2 + 1), q_num(aj) * (j1 * j2))


# -- the framed vertex -----------------------------------------------------------


def vertex_W(mu1, mu2, mu3, framing: Sequence = (0, 0, 0)) -> QRatio:
    """Framed three-leg vertex in the representation basis.

    Shifted specialisations are evaluated exactly through Jacobi-Trudi; with
    ``mu3`` empty only the unshifted hook-content values are needed.
    """
    mus = [as_partition(m) for m in (mu1, mu2, mu3)]
    mu1, mu2, mu3 = mus
    framing = [Fraction(f) for f in framing]
    expo = Fraction(kappa(mu1), 2)
    sgn = 0
    for f, m in zip(framing, mus):
        expo += f * kappa(m) / 2
        sgn += f * m.size
    prefactor = QExact.monomial(expo, sign(sgn))
    mu1t = mu1.conjugate()
    total = QRatio(0)
    for n in range(0, min(mu1t.size, mu2.size) + 1):
        for delta in partitions_of(n):
            if not (mu1t.contains(delta) and mu2.contains(delta)):
                continue
            if not mu3.parts:
                left = schur_principal(mu1t) if n == 0 else skew_schur_jt(mu1t, delta)
                right = schur_principal(mu2) if n == 0 else skew_schur_jt(mu2, delta)
            else:
                left = skew_schur_jt(mu1t, delta, mu3.parts)
                right = skew_schur_jt(mu2, delta, mu3.conjugate().parts)
            total = total + left * right
    return total * schur_principal(mu3) * prefactor


# -- oracles -------------------------------------------------------------------------


def _p1ab_hook_sum(fam: Family, j: int) -> QRatio:
    f = Fraction(fam.b, fam.a)
    total = QRatio(0)
    for s in range(j):
        hook = Partition.hook(j, s)
        total = total + vertex_W(hook, EMPTY, EMPTY, (f, 0, 0)) * Fraction(sign(s), j)
    return total


def y2_hook_ratio(fam: Family, j: int, s: int) -> list[QRatio]:
    """Q-coefficients of ``W_hook / W_empty`` for the hook ``(j-s, 1^s)``.

    The ratio of the infinite products collapses to the finite product
    ``prod_{k<j} (1 - q**(k-s) Q)``.
    """
    f = Fraction(fam.b, fam.a) - 1
    pre = QExact.monomial((f + Fraction(1, 2)) * (Fraction(j * (j - 1), 2) - j * s), sign(f * j))
    poly = [QExact.constant(1)]
    for k in range(j):
        mono = QExact.monomial(k - s)
        nxt = poly + [QExact()]
        for i in range(len(poly)):
            nxt[i + 1] = nxt[i + 1] - mono * poly[i]
        poly = nxt
    den = q_num(j) * q_factorial(j - s - 1) * q_factorial(s)
    return [QRatio(c * pre, den) for c in poly]


def _y2_hook_sum(fam: Family, j: int, l_: int) -> QRatio:
    if l_ > j:
        return QRatio(0)
    total = QRatio(0)
    for s in range(j):
        total = total + y2_hook_ratio(fam, j, s)[l_] * Fraction(sign(s), j)
    return total


def y3_connected_vertex(fam: Family, alpha: Partition, beta: Partition, skew=None) -> QRatio:
    """Connected two-leg vertex at framing ``(a/b - 1, 0)`` for hook legs.

    ``skew(outer, inner)`` evaluates a skew Schur function at ``q**rho``; the
    default uses the closed hook formula.
    """
    f = Fraction(fam.a, fam.b)
    pre = QExact.monomial(f * kappa(alpha) / 2, sign((f - 1) * alpha.size))
    at = alpha.conjugate()
    if skew is None:

        def skew(outer, inner):
            return schur_skew_hook_principal(outer[0], len(outer) - 1, inner[0], len(inner) - 1)

    total = QRatio(0)
    for n in range(1, min(at.size, beta.size) + 1):
        for k in range(1, n + 1):
            delta = Partition.hook(n, n - k)
            if at.contains(delta) and beta.contains(delta):
                total = total + skew(at, delta) * skew(beta, delta)
    return total * pre


def _y3_double_hook_sum(fam: Family, j1: int, j2: int, skew=None) -> QRatio:
    total = QRatio(0)
    for i1 in range(j1):
        for i2 in range(j2):
            w = y3_connected_vertex(fam, Partition.hook(j1, i1), Partition.hook(j2, i2), skew)
            total = total + w * Fraction(sign(i1 + i2), j1 * j2)
    return total


def _y3_triple_sum(fam: Family, j1: int, j2: int) -> QRatio:
    """The resummation-ready form with the ``a``, ``b``, ``c`` coefficients, summed term by term."""
    f = Fraction(fam.a, fam.b)
    aj = f * j1
    # every (q;q)_m (q;q)_{n-m} divides (q;q)_n, so one common denominator serves all terms
    common = q_pochhammer(j1) * q_pochhammer(j2)
    total = QExact()
    for k in range(1, min(j1, j2) + 1):
        c = QExact.monomial(Fraction(k * (k - 1), 2) - k * aj - k * j2, sign(k))
        inner = QExact()
        for r in range(k):
            inner = inner + QExact.monomial(r * aj)
        for l1 in range(0, j1 - k + 1):
            a_num = QExact.monomial(Fraction(l1 * (l1 - 1), 2) - l1 * aj, sign(l1))
            a_den = q_pochhammer(l1) * q_pochhammer(j1 - k - l1)
            for l2 in range(0, j2 - k + 1):
                b_num = QExact.monomial(Fraction(l2 * (l2 + 1 + 2 * k - 2 * j2), 2), sign(l2))
                b_den = q_pochhammer(l2) * q_pochhammer(j2 - k - l2)
                total = total + a_num * b_num * c * inner * common.exact_div(a_den * b_den)
    pre = QExact.monomial((aj * j1 + j1 * (f + 1) + j2 * j2) / 2, sign(aj + j2 + 1))
    return QRatio(total * pre, common * (j1 * j2))


def open_oracle(fam: Family, w) -> QRatio:
    """Open invariant from the unsimplified sums (hook sums; triple sum for Y3)."""
    w = _windings(fam, w)
    if fam.kind is Kind.P1AB:
        return _p1ab_hook_sum(fam, w[0])
    if fam.kind is Kind.Y2:
        return _y2_hook_sum(fam, *w)
    return _y3_triple_sum(fam, *w)


def open_vertex_sum(fam: Family, w) -> QRatio:
    """Second oracle: hook sums of vertex data before any resummation.

    P1AB and Y2 as in :func:`open_oracle`; Y3 via the double hook sum of
    connected two-leg vertices with skew Schur functions from Jacobi-Trudi.
    """
    w = _windings(fam, w)
    if fam.kind is Kind.Y3:
        return _y3_double_hook_sum(fam, *w, skew=lambda outer, inner: skew_schur_jt(outer, inner))
    return open_oracle(fam, w)


def y2_glued_ratio(fam: Family, alpha, lmax: int) -> list[QRatio]:
    """Q-coefficients up to ``Q**lmax`` of ``W_alpha / W_empty`` from the gluing sum.

    ``W_alpha = framing(alpha) s_alpha(q**rho) sum_nu s_{nu^T}(q**(rho+alpha)) s_nu(q**rho) (-Q)**|nu|``,
    with every Schur value exact; the infinite-product shortcut is not used.
    """
    alpha = as_partition(alpha)
    f = Fraction(fam.b, fam.a) - 1
    pre = QRatio(QExact.monomial(f * kappa(alpha) / 2, sign(f * alpha.size))) * schur_principal(alpha)

    def glued(shift):
        out = []
        for n in range(lmax + 1):
            c = QRatio(0)
            for nu in partitions_of(n):
                c = c + skew_schur_jt(nu.conjugate(), EMPTY, shift) * schur_principal(nu)
            out.append(c * sign(n))
        return out

    num = glued(alpha.parts)
    den = glued(())
    # power-series division; den[0] == 1
    quot = []
    for n in range(lmax + 1):
        c = num[n]
        for m in range(n):
            c = c - quot[m] * den[n - m]
        quot.append(c)
    return [c * pre for c in quot]


# -- correspondences ---------------------------------------------------------------


def log_open_rhs(fam: Family, d) -> QRatio:
    """The normalised log polynomial that the open invariant at ``winding_of(d)`` must equal."""
    d = validate(fam, d)
    D = boundary_degrees(fam, d)
    l = fam.l
    value = QRatio(log_poly(fam, d) * sign(D[-1] - 1), q_num(D[-1]))
    for Dj, r in zip(D[:-1], fam.isotropy()):
        value = value * Fraction(sign(r * Dj - 1), r * Dj)
    if l == 3:
        value = value * QRatio(q_num(1))
    return value


def open_genus0(fam: Family, w) -> Fraction:
    """Leading ``q -> 1`` coefficient: ``lim [1]_q**(3-l) O``."""
    o = open_closed(fam, w)
    if fam.l == 2:
        o = o * QRatio(q_num(1))
    return eval_at_one(o)


def loc_open_factor(fam: Family, d) -> Fraction:
    """``prod_{j<l} (-1)**(d.D_j (r_j - 1)) / r_j`` relating genus-0 open and local invariants."""
    D = boundary_degrees(fam, d)
    out = Fraction(1)
    for Dj, r in zip(D[:-1], fam.isotropy()):
        out *= Fraction(sign(Dj * (r - 1)), r)
    return out


def open_of_class(fam: Family, d) -> QRatio:
    return open_closed(fam, winding_of(fam, d))
