"""The three orbifold families, their curve classes and the winding dictionary.

* ``P1AB``: the weighted plane P(1,a,b) with two boundary components; a class
  is ``d`` times the effective generator.
* ``Y2``: a blow-up with classes written ``(d0, d1)`` in the basis ``(f, E)``,
  two boundary components.
* ``Y3``: the further blow-up with three boundary components, same basis.

Curve classes of Y2 with ``d1 > d0`` are accepted and carry zero
invariants; Y3 classes must satisfy ``0 <= d1 <= d0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union


class Kind(str, Enum):
    P1AB = "p1ab"
    Y2 = "y2"
    Y3 = "y3"


class InvalidClass(ValueError):
    pass


class NotInImage(ValueError):
    """Winding data not hit by the degree-to-winding map."""


@dataclass(frozen=True)
class Family:
    kind: Kind
    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.a < 1 or self.b < 1:
            raise ValueError("a and b must be positive")
        if math.gcd(self.a, self.b) != 1:
            raise ValueError(f"a={self.a} and b={self.b} must be coprime")

    @property
    def l(self) -> int:
        """Number of boundary components."""
        return 3 if self.kind is Kind.Y3 else 2

    def framings(self) -> list[Fraction]:
        a, b = self.a, self.b
        if self.kind is Kind.P1AB:
            return [Fraction(b, a)]
        if self.kind is Kind.Y2:
            return [Fraction(b, a) - 1]
        return [Fraction(a, b) - 1, Fraction(0)]

    def framing_pairs(self) -> list[tuple[int, int]]:
        """``(p, r)`` per open leg; ``r`` is the isotropy order that rescales windings.

        Written from the stated orders rather than the reduced fraction so
        that e.g. framing ``0`` on Y2 with ``a = 1`` keeps ``r = 1``.
        """
        if self.kind is Kind.Y3:
            f1 = self.framings()[0]
            return [(int(f1 * self.b), self.b), (0, 1)]
        f = self.framings()[0]
        return [(int(f * self.a), self.a)]

    def isotropy(self) -> list[int]:
        return [r for _, r in self.framing_pairs()]

    def __str__(self):
        return f"{self.kind.value}({self.a},{self.b})"


@dataclass(frozen=True)
class CurveClass:
    """``d`` for P1AB, ``(d0, d1)`` for Y2/Y3, stored as a tuple."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(x) for x in self.degrees))

    @classmethod
    def of(cls, *degrees: int) -> "CurveClass":
        return cls(tuple(degrees))

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    def divided(self, k: int) -> "CurveClass":
        if any(x % k for x in self.degrees):
            raise ValueError(f"{k} does not divide {self.degrees}")
        return CurveClass(tuple(x // k for x in self.degrees))

    def __str__(self):
        return ",".join(map(str, self.degrees))


ClassLike = Union[CurveClass, int, tuple, list]


def as_class(d: ClassLike) -> CurveClass:
    if isinstance(d, CurveClass):
        return d
    if isinstance(d, int):
        return CurveClass((d,))
    return CurveClass(tuple(d))


def is_zero_region(fam: Family, d: ClassLike) -> bool:
    """Y2 classes with ``d1 > d0``: accepted, every invariant vanishes."""
    d = as_class(d)
    return fam.kind is Kind.Y2 and len(d) == 2 and d[1] > d[0]


def validate(fam: Family, d: ClassLike) -> CurveClass:
    d = as_class(d)
    if fam.kind is Kind.P1AB:
        if len(d) != 1 or d[0] < 1:
            raise InvalidClass(f"{fam}: class must be a single degree d >= 1, got {d.degrees}")
        return d
    if len(d) != 2:
        raise InvalidClass(f"{fam}: class must be (d0, d1), got {d.degrees}")
    d0, d1 = d
    if d0 < 1 or d1 < 0:
        raise InvalidClass(f"{fam}: need d0 >= 1 and d1 >= 0, got {d.degrees}")
    if d1 > d0 and fam.kind is Kind.Y3:
        raise InvalidClass(f"{fam}: need d1 <= d0, got {d.degrees}")
    if any(x <= 0 for x in _raw_degrees(fam, d)):
        raise InvalidClass(f"{fam}: class {d.degrees} has a zero boundary degree")
    return d


def _raw_degrees(fam: Family, d: CurveClass) -> tuple[int, ...]:
    a, b = fam.a, fam.b
    if fam.kind is Kind.P1AB:
        (n,) = d
        return (n, (a + b) * n)
    d0, d1 = d
    if fam.kind is Kind.Y2:
        return (d0, (a + b - 1) * d0 + d1)
    return (d0, (b - 1) * d0 + d1, a * d0)


def boundary_degrees(fam: Family, d: ClassLike) -> tuple[int, ...]:
    """Intersection numbers ``d . D_i``, ``i = 1..l``."""
    return _raw_degrees(fam, validate(fam, d))


def winding_of(fam: Family, d: ClassLike) -> tuple[int, ...]:
    """Open winding data attached to a class: ``(j,)``, ``(j, l)`` or ``(j1, j2)``.

    For Y2 the second entry is the Q-degree ``l`` rather than a winding.
    """
    d = validate(fam, d)
    a, b = fam.a, fam.b
    if fam.kind is Kind.P1AB:
        return (a * d[0],)
    d0, d1 = d
    if fam.kind is Kind.Y2:
        return (a * d0, (a - 1) * d0 + d1)
    return (b * d0, (b - 1) * d0 + d1)


def class_of_winding(fam: Family, w: ClassLike) -> CurveClass:
    """Inverse of :func:`winding_of`."""
    w = tuple(as_class(w))
    a, b = fam.a, fam.b
    if fam.kind is Kind.P1AB:
        if len(w) != 1:
            raise NotInImage("P1AB winding data is a single integer j")
        (j,) = w
        if j < 1 or j % a:
            raise NotInImage(f"winding {j} is not a positive multiple of a={a}")
        return validate(fam, (j // a,))
    if len(w) != 2:
        raise NotInImage(f"{fam} winding data has two entries")
    if fam.kind is Kind.Y2:
        j, l_ = w
        if j < 1 or j % a:
            raise NotInImage(f"winding {j} is not a positive multiple of a={a}")
        d0 = j // a
        d1 = l_ - (a - 1) * d0
        if d1 < 0:
            raise NotInImage(f"Q-degree {l_} is below (a-1) d0 = {(a - 1) * d0}")
        return validate(fam, (d0, d1))
    j1, j2 = w
    if j1 < 1 or j1 % b:
        raise NotInImage(f"winding {j1} is not a positive multiple of b={b}")
    d0 = j1 // b
    d1 = j2 - (b - 1) * d0
    if d1 < 0 or d1 > d0:
        raise NotInImage(f"winding {j2} gives d1 = {d1} outside 0..{d0}")
    return validate(fam, (d0, d1))


def classes_up_to(fam: Family, dmax: int, include_zero_region: bool = False) -> list[CurveClass]:
    """Valid classes with ``d <= dmax`` (resp. ``d0 <= dmax``, ``d1 <= d0``)."""
    out = []
    if fam.kind is Kind.P1AB:
        return [CurveClass((n,)) for n in range(1, dmax + 1)]
    for d0 in range(1, dmax + 1):
        top = dmax if include_zero_region and fam.kind is Kind.Y2 else d0
        for d1 in range(0, top + 1):
            try:
                out.append(validate(fam, (d0, d1)))
            except InvalidClass:
                pass
    return out


def coprime_pairs(ab_max: int, ordered: bool = True) -> list[tuple[int, int]]:
    """Coprime ``(a, b)`` with ``1 <= a <= b <= ab_max`` (or all orders)."""
    return [
        (a, b)
        for a in range(1, ab_max + 1)
        for b in range(1, ab_max + 1)
        if math.gcd(a, b) == 1 and (a <= b or not ordered)
    ]
