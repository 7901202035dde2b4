from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from looijenga.partitions import (
    EMPTY,
    Partition,
    h_principal,
    h_shifted,
    h_truncated,
    hooks_of,
    kappa,
    partitions_of,
    schur_hook_principal,
    schur_principal,
    schur_skew_hook_principal,
    skew_schur_jt,
    skew_schur_truncated,
    truncation_stable,
)
from looijenga.qkernel import QExact, QRatio, q_factorial, q_num, q_pochhammer


def q(e, c=1):
    return QExact.monomial(Fraction(e), c)


def test_partition_basics():
    mu = Partition((3, 1))
    assert mu.size == 4 and mu.length == 2
    assert mu.conjugate() == Partition((2, 1, 1))
    assert mu.is_hook() and not Partition((2, 2)).is_hook()
    assert Partition.hook(4, 1) == mu
    assert mu.contains(Partition((2,))) and not mu.contains(Partition((1, 1, 1)))
    assert sorted(mu.hook_lengths()) == [1, 1, 2, 4]
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_kappa_examples():
    assert kappa((1,)) == 0
    assert kappa((2,)) == 2
    assert kappa((1, 1)) == -2
    assert kappa(EMPTY) == 0


def test_enumeration_examples():
    assert len(partitions_of(4)) == 5
    assert partitions_of(0) == [EMPTY]
    assert hooks_of(3) == [Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))]
    assert [len(partitions_of(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    with pytest.raises(ValueError):
        partitions_of(-1)


@pytest.mark.parametrize("n", range(13))
def test_kappa_parity_and_conjugation(n):
    for mu in partitions_of(n):
        assert kappa(mu) % 2 == 0
        assert kappa(mu.conjugate()) == -kappa(mu)
        assert mu.conjugate().conjugate() == mu


def test_hook_examples():
    assert schur_hook_principal(1, 0) == QRatio(1, q_num(1))
    assert schur_hook_principal(2, 0) == QRatio(q("1/2"), q_num(2) * q_num(1))
    assert schur_hook_principal(2, 1) == QRatio(q("-1/2"), q_num(2) * q_num(1))
    with pytest.raises(ValueError):
        schur_hook_principal(2, 2)
    with pytest.raises(ValueError):
        schur_hook_principal(0, 0)


def test_hook_with_extra_factorial_disagrees():
    # the variant with [j-s]! instead of [j-s-1]! is not the Schur function
    j, s = 2, 0
    variant = QRatio(q("1/2"), q_num(j) * q_factorial(j - s) * q_factorial(s))
    assert variant != skew_schur_jt(Partition.hook(j, s))
    assert schur_hook_principal(j, s) == skew_schur_jt(Partition.hook(j, s))


@pytest.mark.parametrize("j", range(1, 9))
def test_hook_conjugation(j):
    for s in range(j):
        # the q -> 1/q flip of [n]_q costs a sign per box
        assert schur_hook_principal(j, j - 1 - s) == schur_hook_principal(j, s).bar() * (-1) ** j


@pytest.mark.parametrize("n", range(1, 9))
def test_hook_content_conjugation(n):
    for mu in partitions_of(n):
        assert schur_principal(mu.conjugate()) == schur_principal(mu).bar() * (-1) ** n


@pytest.mark.parametrize("j", range(1, 7))
def test_hook_vs_jacobi_trudi(j):
    for s in range(j):
        mu = Partition.hook(j, s)
        assert schur_hook_principal(j, s) == skew_schur_jt(mu) == schur_principal(mu)


@pytest.mark.parametrize("n", range(1, 6))
def test_hook_content_vs_jacobi_trudi(n):
    for mu in partitions_of(n):
        assert schur_principal(mu) == skew_schur_jt(mu)


@pytest.mark.parametrize("k", range(7))
def test_h_truncation_stable(k):
    # the truncation error sinks roughly one unit per added variable
    exact = h_principal(k)
    for n in (8, 12, 16):
        diff = exact - QRatio(h_truncated(k, n))
        if not diff.is_zero():
            assert diff.num.max_exponent() - diff.den.max_exponent() <= -(n - k) + Fraction(k + 1, 2)


@pytest.mark.parametrize("mu", [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)])
def test_truncated_oracle(mu):
    assert truncation_stable(mu, nvars=8)
    assert truncation_stable(mu, alpha=(2, 1), nvars=8)


def test_skew_examples():
    assert schur_skew_hook_principal(1, 0, 1, 0) == QRatio(1)
    assert schur_skew_hook_principal(2, 1, 3, 0).is_zero()
    assert schur_skew_hook_principal(2, 1, 1, 2).is_zero()
    assert schur_skew_hook_principal(2, 1, 0, 0) == schur_hook_principal(3, 1)
    with pytest.raises(ValueError):
        schur_skew_hook_principal(2, 1, 0, 1)


@pytest.mark.parametrize("d,i", [(d, i) for d in range(1, 5) for i in range(4)])
def test_skew_hook_vs_jacobi_trudi(d, i):
    outer = Partition((d,) + (1,) * i)
    for k in range(1, d + 1):
        for r in range(i + 1):
            inner = Partition((k,) + (1,) * r)
            assert schur_skew_hook_principal(d, i, k, r) == skew_schur_jt(outer, inner)


def test_skew_closed_form_needs_nonempty_inner():
    # plugging k = r = 0 into the closed form does not give the hook value
    d, i = 2, 1
    raw = QRatio(q(Fraction(d * d + i, 2), (-1) ** (d + i)), QExact.constant(1))
    raw = raw * QRatio(1, q_pochhammer(d) * q_pochhammer(i))
    assert raw != skew_schur_jt(Partition((d, 1)))


@given(st.integers(0, 6), st.lists(st.integers(0, 3), max_size=3))
@settings(max_examples=40, deadline=None)
def test_shifted_h_vs_truncation(k, alpha):
    alpha = tuple(alpha)
    exact = h_shifted(k, alpha)
    n = 20
    diff = exact - QRatio(h_truncated(k, n, alpha))
    if not diff.is_zero():
        assert diff.num.max_exponent() - diff.den.max_exponent() < -n / 2 + k + 4


@pytest.mark.parametrize("alpha", [(1,), (0, 2), (3, 1, 1)])
def test_shifted_jt_truncation(alpha):
    for lam, mu in [((2, 1), ()), ((3, 1), (1,)), ((2, 2), (1,))]:
        assert truncation_stable(lam, mu, alpha, nvars=8)


def test_skew_truncated_is_laurent():
    f = skew_schur_truncated((2, 1), (1,), (), nvars=5)
    assert isinstance(f, QExact) and not f.is_zero()
