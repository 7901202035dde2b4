"""Motivic and numerical DT invariants of symmetric quivers.

The stacky generating series

    A(x) = sum_d (-q**(1/2))**E(d,d) x**d / prod_i (q;q)_{d_i}

is written as ``Exp(sum_d DT_d(q) x**d / [1]_q)`` with
``DT_d(q) = sum_i DT_{d,i} (-q**(1/2))**(-i)``.  ``Exp``/``Log`` are the
plethystic exponential and logarithm, with Adams operations
``x -> x**n``, ``q**(1/2) -> q**(n/2)``.

Numerical invariants: every ``DT_d(q)`` we meet has nonnegative coefficients
``DT_{d,i}`` and all its ``i`` of one parity, so ``sum_i (-1)**i DT_{d,i}``
is ``+-`` the total count ``sum_i DT_{d,i}``.  For an ``m``-loop quiver the
sign is ``(-1)**(m d)``-like, so the nonnegative quantity is the total
count; :func:`dt_numerical` returns it and :func:`dt_signed` the alternating
sum.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .qkernel import QExact, QRatio, mobius, q_num, q_pochhammer


class DTViolation(ArithmeticError):
    """A DT generating polynomial failed integrality, positivity or purity."""


@dataclass(frozen=True)
class SymQuiver:
    arrows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        arrows = tuple(tuple(int(x) for x in row) for row in self.arrows)
        n = len(arrows)
        if n == 0 or any(len(row) != n for row in arrows):
            raise ValueError("arrow matrix must be square and nonempty")
        if any(x < 0 for row in arrows for x in row):
            raise ValueError("arrow counts must be nonnegative")
        if any(arrows[i][j] != arrows[j][i] for i in range(n) for j in range(n)):
            raise ValueError("quiver must be symmetric")
        object.__setattr__(self, "arrows", arrows)

    @classmethod
    def loops(cls, m: int) -> "SymQuiver":
        return cls(((m,),))

    @classmethod
    def from_json(cls, text: str) -> "SymQuiver":
        return cls(tuple(tuple(r) for r in json.loads(text)["arrows"]))

    @property
    def n(self) -> int:
        return len(self.arrows)

    def euler(self, d: Sequence[int], e: Sequence[int]) -> int:
        n = self.n
        return sum(d[i] * e[i] for i in range(n)) - sum(
            self.arrows[i][j] * d[i] * e[j] for i in range(n) for j in range(n)
        )

    def __str__(self):
        return json.dumps({"arrows": [list(r) for r in self.arrows]})


@dataclass
class MultiSeries:
    """Truncated power series in ``x_1..x_n`` with QRatio coefficients.

    Kept: monomials with ``d_i <= cutoff[i]`` and, if ``total`` is set,
    ``sum(d) <= total``.
    """

    cutoff: tuple[int, ...]
    total: Optional[int] = None
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        self.cutoff = tuple(self.cutoff)
        self.coeffs = {tuple(k): v for k, v in self.coeffs.items() if not v.is_zero() and self.keeps(k)}

    def keeps(self, d) -> bool:
        return all(0 <= x <= c for x, c in zip(d, self.cutoff)) and (
            self.total is None or sum(d) <= self.total
        )

    def like(self, coeffs=None) -> "MultiSeries":
        return MultiSeries(self.cutoff, self.total, coeffs or {})

    def keys(self) -> list[tuple[int, ...]]:
        """Every monomial inside the truncation, in graded order."""
        ks = [k for k in itertools.product(*(range(c + 1) for c in self.cutoff)) if self.keeps(k)]
        return sorted(ks, key=lambda k: (sum(k), k))

    def __getitem__(self, d) -> QRatio:
        return self.coeffs.get(tuple(d), QRatio(0))

    def constant(self) -> QRatio:
        return self[(0,) * len(self.cutoff)]

    def __add__(self, other: "MultiSeries") -> "MultiSeries":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return self.like(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "MultiSeries":
        return self.like({k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other: "MultiSeries") -> "MultiSeries":
        out: dict = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = tuple(x + y for x, y in zip(k1, k2))
                if not self.keeps(k):
                    continue
                p = v1 * v2
                out[k] = out[k] + p if k in out else p
        return self.like(out)

    def adams(self, n: int) -> "MultiSeries":
        """``x -> x**n`` and ``q -> q**n``."""
        out = {}
        for k, v in self.coeffs.items():
            nk = tuple(n * x for x in k)
            if self.keeps(nk):
                out[nk] = v.adams(n)
        return self.like(out)

    def max_degree(self) -> int:
        return self.total if self.total is not None else sum(self.cutoff)

    def log(self) -> "MultiSeries":
        """``log`` of a series with constant term 1."""
        if self.constant() != QRatio(1):
            raise ValueError("log needs constant term 1")
        x = self - self.like({(0,) * len(self.cutoff): QRatio(1)})
        out = self.like()
        power = self.like({(0,) * len(self.cutoff): QRatio(1)})
        for m in range(1, self.max_degree() + 1):
            power = power * x
            if not power.coeffs:
                break
            out = out + power.scale(Fraction((-1) ** (m + 1), m))
        return out

    def exp(self) -> "MultiSeries":
        """``exp`` of a series with zero constant term."""
        if not self.constant().is_zero():
            raise ValueError("exp needs zero constant term")
        one = self.like({(0,) * len(self.cutoff): QRatio(1)})
        out = one
        power = one
        for m in range(1, self.max_degree() + 1):
            power = power * self
            if not power.coeffs:
                break
            out = out + power.scale(Fraction(1, factorial(m)))
        return out


def pleth_exp(f: MultiSeries) -> MultiSeries:
    acc = f.like()
    for n in range(1, f.max_degree() + 1):
        acc = acc + f.adams(n).scale(Fraction(1, n))
    return acc.exp()


def pleth_log(F: MultiSeries) -> MultiSeries:
    lg = F.log()
    acc = F.like()
    for n in range(1, F.max_degree() + 1):
        mu = mobius(n)
        if mu:
            acc = acc + lg.adams(n).scale(Fraction(mu, n))
    return acc


def motivic_series(Q: SymQuiver, cutoff, total: Optional[int] = None) -> MultiSeries:
    """The stacky generating series truncated at ``cutoff`` (int or per-vertex)."""
    if isinstance(cutoff, int):
        cutoff = (cutoff,) * Q.n
    if any(c < 1 for c in cutoff):
        raise ValueError("cutoff must be >= 1")
    s = MultiSeries(tuple(cutoff), total)
    coeffs = {}
    for d in s.keys():
        e = Q.euler(d, d)
        num = QExact.monomial(Fraction(e, 2), -1 if e % 2 else 1)
        den = QExact.constant(1)
        for x in d:
            den = den * q_pochhammer(x)
        coeffs[d] = QRatio(num, den)
    return s.like(coeffs)


@dataclass(frozen=True)
class DTPolynomial:
    """``DT_d(q) = sum_i DT_{d,i} (-q**(1/2))**(-i)``."""

    poly: QExact

    def coefficients(self) -> dict[int, int]:
        """``{i: DT_{d,i}}``."""
        out = {}
        for e, c in self.poly.q_terms().items():
            i = -2 * e
            if i.denominator != 1:
                raise DTViolation(f"exponent {e} is not a multiple of 1/2")
            i = i.numerator
            out[i] = int(c) * (-1 if i % 2 else 1)
        return out

    def signed(self) -> int:
        return sum((-1 if i % 2 else 1) * c for i, c in self.coefficients().items())

    def count(self) -> int:
        return sum(self.coefficients().values())


def dt_invariants(Q: SymQuiver, cutoff, total: Optional[int] = None) -> dict[tuple[int, ...], DTPolynomial]:
    """Motivic DT polynomials for every nonzero dimension vector in the truncation.

    Certifies integrality, nonnegativity of ``DT_{d,i}`` and parity purity.
    """
    F = motivic_series(Q, cutoff, total)
    L = pleth_log(F)
    one = q_num(1)
    out = {}
    for d in F.keys():
        if not any(d):
            continue
        val = L[d] * QRatio(one)
        if not val.is_laurent():
            raise DTViolation(f"DT at {d} is not a Laurent polynomial: {val}")
        poly = val.to_exact()
        if not poly.is_integral():
            raise DTViolation(f"DT at {d} has non-integer coefficients: {poly}")
        dt = DTPolynomial(poly)
        coeffs = dt.coefficients()
        if any(c < 0 for c in coeffs.values()):
            raise DTViolation(f"DT at {d} has a negative coefficient: {coeffs}")
        if len({i % 2 for i in coeffs}) > 1:
            raise DTViolation(f"DT at {d} mixes parities: {coeffs}")
        out[d] = dt
    return out


def dt_numerical(Q: SymQuiver, cutoff, total: Optional[int] = None) -> dict[tuple[int, ...], int]:
    """Nonnegative numerical DT invariants (total counts)."""
    return {d: p.count() for d, p in dt_invariants(Q, cutoff, total).items()}


def dt_signed(Q: SymQuiver, cutoff, total: Optional[int] = None) -> dict[tuple[int, ...], int]:
    """``sum_i (-1)**i DT_{d,i}``, the alternating sum."""
    return {d: p.signed() for d, p in dt_invariants(Q, cutoff, total).items()}


# -- comparison with BPS invariants ------------------------------------------------


@dataclass
class KPDTReport:
    quiver: SymQuiver
    rows: list = field(default_factory=list)  # (dimension vector, dt, expected, ok)

    @property
    def ok(self) -> bool:
        return all(r[3] for r in self.rows)

    def failures(self):
        return [r for r in self.rows if not r[3]]


def check_kpdt(
    Q: SymQuiver,
    omega: Callable[[tuple[int, ...]], int],
    shifts: Sequence[int],
    sweep: Iterable[tuple[int, ...]],
    dts: Optional[Mapping] = None,
) -> KPDTReport:
    """Compare ``DT^num_d`` with ``|Omega_{kappa(d)} + sum_i alpha_i delta_{d, v_i}|``.

    ``omega`` maps a dimension vector to the BPS invariant of its image class
    (the lattice map is folded into it).
    """
    sweep = list(sweep)
    if dts is None:
        cap = max(sum(d) for d in sweep)
        dts = dt_numerical(Q, cap, total=cap if Q.n > 1 else None)
    report = KPDTReport(Q)
    n = Q.n
    for d in sweep:
        expected = omega(d)
        for i in range(n):
            if d == tuple(1 if k == i else 0 for k in range(n)):
                expected += shifts[i]
        got = dts.get(d, 0)
        report.rows.append((d, got, abs(expected), got == abs(expected)))
    return report


def two_vertex_quivers(max_arrows: int):
    for l1 in range(max_arrows + 1):
        for l2 in range(max_arrows + 1):
            for m in range(max_arrows + 1):
                yield SymQuiver(((l1, m), (m, l2)))


@dataclass
class SearchResult:
    fits: list  # quivers consistent with the fitting data
    validated: list  # of those, the ones also consistent with held-out data

    @property
    def unique(self) -> Optional[SymQuiver]:
        return self.validated[0] if len(self.validated) == 1 else None


def quiver_search(
    candidates: Iterable[SymQuiver],
    target: Mapping[tuple[int, ...], int],
    shifts: Sequence[int],
    heldout: Mapping[tuple[int, ...], int],
) -> SearchResult:
    """Keep quivers reproducing ``target`` (values of Omega); re-check them on ``heldout``.

    Candidates are screened degree by degree so that most are discarded at low
    cutoff.
    """
    if not target:
        raise ValueError("empty fitting table: nothing to search against")
    fit_cap = max(sum(d) for d in target)
    fits = []
    for Q in candidates:
        ok = True
        for cap in range(1, fit_cap + 1):
            part = {d: v for d, v in target.items() if sum(d) <= cap}
            rep = check_kpdt(Q, lambda d: part[d], shifts, part, dt_numerical(Q, cap, total=cap))
            if not rep.ok:
                ok = False
                break
        if ok:
            fits.append(Q)
    validated = []
    if heldout:
        cap = max(sum(d) for d in heldout)
        for Q in fits:
            rep = check_kpdt(Q, lambda d: heldout[d], shifts, heldout, dt_numerical(Q, cap, total=cap))
            if rep.ok:
                validated.append(Q)
    else:
        validated = list(fits)
    return SearchResult(fits, validated)
