"""Published reference values, written as functions of ``b``.

``conifold_kp(b, d0, d1)`` is the genus-0 KP invariant of Y2 with ``a = 1``
for ``1 <= d0 <= 5`` and ``1 <= d1 <= 4``; ``p1ab_kp(b, d)`` is the KP
sequence of P(1,1,b) for ``d = 1..5``.
"""

from __future__ import annotations

from fractions import Fraction


def _s(b: int) -> int:
    return -1 if b % 2 else 1


def conifold_kp(b: int, d0: int, d1: int) -> Fraction:
    s = _s(b)
    F = Fraction
    rows = {
        1: [s, 0, 0, 0],
        2: [-b, F(s * (s * (2 * b + 1) - 1), 4), 0, 0],
        3: [F(s * b * (3 * b - 1), 2), F(-s * b * (3 * b + 1), 2), F(s * b * (b + 1), 2), 0],
        4: [
            F(-b * (8 * b * b - 6 * b + 1), 3),
            4 * b**3,
            F(-b * (2 * b + 1) * (4 * b + 1), 3),
            F(b * (b + 1) * (2 * b + 1), 3),
        ],
        5: [
            F(s * b * (5 * b - 3) * (5 * b - 2) * (5 * b - 1), 24),
            F(-s * b * (5 * b - 2) * (5 * b - 1) * (5 * b + 1), 12),
            F(s * b * (5 * b - 1) * (5 * b + 1) * (5 * b + 2), 12),
            F(-s * b * (5 * b + 1) * (5 * b + 2) * (5 * b + 3), 24),
        ],
    }
    if d0 not in rows or not 1 <= d1 <= 4:
        raise KeyError((d0, d1))
    return Fraction(rows[d0][d1 - 1])


CONIFOLD_GRID = [(d0, d1) for d0 in range(1, 6) for d1 in range(1, 5)]


def p1ab_kp(b: int, d: int) -> Fraction:
    s = _s(b)
    seq = [
        Fraction(s),
        Fraction(2 * b + 1 - s, 4),
        Fraction(s * b * (b + 1), 2),
        Fraction(b * (b + 1) * (2 * b + 1), 3),
        Fraction(5 * s * b * (b + 1) * (5 * b * (b + 1) + 2), 24),
    ]
    if not 1 <= d <= 5:
        raise KeyError(d)
    return seq[d - 1]


LOOP_QUIVER_DT = {2: [1, 1, 1, 2, 5], 3: [1, 1, 3, 10, 40]}
