from fractions import Fraction

import pytest

from looijenga.bps import (
    IntegralityViolation,
    certify_integral,
    kp_from_omega,
    kp_genus0,
    omega_q,
    omega_q_via_open,
    omega_ratio,
)
from looijenga.geometry import Family, Kind, classes_up_to, coprime_pairs
from looijenga.qkernel import QExact, QRatio, eval_at_one, q_num
from looijenga.reference import conifold_kp, p1ab_kp


def test_omega_examples():
    fam = Family("p1ab", 1, 1)
    assert omega_q(fam, 1) == QExact.constant(-1)
    assert omega_q(fam, 2) == QExact.constant(1)
    assert omega_q_via_open(fam, 1) == QExact.constant(-1)
    assert omega_q_via_open(fam, 2) == QExact.constant(1)
    for b in range(1, 6):
        assert eval_at_one(omega_q(Family("y2", 1, b), (1, 1))) == (-1) ** b
    y3 = Family("y3", 1, 1)
    assert omega_q_via_open(y3, (1, 1)) == omega_q(y3, (1, 1))


def test_kp_examples():
    assert kp_genus0(Family("p1ab", 1, 1), 2) == 1
    for b in range(1, 6):
        assert kp_genus0(Family("p1ab", 1, b), 1) == (-1) ** b
        assert kp_genus0(Family("y2", 1, b), (2, 1)) == -b


def test_certificate_rejects():
    with pytest.raises(IntegralityViolation):
        certify_integral(QRatio(1, q_num(1)), "pole")
    with pytest.raises(IntegralityViolation):
        certify_integral(QRatio(QExact.constant(Fraction(1, 2))), "half")
    assert certify_integral(QRatio(q_num(2), q_num(1)), "ok") == QExact.monomial(Fraction(1, 2)) + QExact.monomial(
        Fraction(-1, 2)
    )


def test_zero_region_bps():
    fam = Family("y2", 1, 2)
    assert omega_q(fam, (1, 2)).is_zero()
    assert omega_ratio(fam, (1, 2)).is_zero()
    assert kp_genus0(fam, (2, 3)) == 0


@pytest.mark.parametrize("kind", list(Kind))
def test_integrality_sweep(kind):
    for a, b in coprime_pairs(4, ordered=False):
        fam = Family(kind, a, b)
        for d in classes_up_to(fam, 3):
            om = omega_q(fam, d)
            assert om.is_integral() and om.is_symmetric()
            assert om == omega_q_via_open(fam, d)
            assert kp_from_omega(fam, d) == kp_genus0(fam, d)


def test_table1_spot():
    for b in range(1, 6):
        fam = Family("y2", 1, b)
        for d0 in range(1, 4):
            for d1 in range(1, 5):
                assert kp_genus0(fam, (d0, d1)) == conifold_kp(b, d0, d1)


def test_kp_sequence_spot():
    for b in range(1, 5):
        fam = Family("p1ab", 1, b)
        assert [kp_genus0(fam, d) for d in range(1, 6)] == [p1ab_kp(b, d) for d in range(1, 6)]


def test_reference_domain():
    with pytest.raises(KeyError):
        conifold_kp(1, 6, 1)
    with pytest.raises(KeyError):
        p1ab_kp(1, 6)
