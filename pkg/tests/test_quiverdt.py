from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from looijenga.qkernel import QExact, QRatio, q_num
from looijenga.quiverdt import (
    DTPolynomial,
    DTViolation,
    MultiSeries,
    SymQuiver,
    check_kpdt,
    dt_invariants,
    dt_numerical,
    dt_signed,
    motivic_series,
    pleth_exp,
    pleth_log,
    quiver_search,
    two_vertex_quivers,
)
from looijenga.reference import LOOP_QUIVER_DT


def q(e, c=1):
    return QExact.monomial(Fraction(e), c)


def test_quiver_validation():
    assert SymQuiver.loops(2).euler((3,), (3,)) == -9
    assert SymQuiver.from_json('{"arrows": [[1, 2], [2, 0]]}').n == 2
    with pytest.raises(ValueError):
        SymQuiver(((0, 1), (2, 0)))
    with pytest.raises(ValueError):
        SymQuiver(((-1,),))
    with pytest.raises(ValueError):
        SymQuiver(())


def test_motivic_examples():
    zero = motivic_series(SymQuiver.loops(0), 3)
    assert zero[(1,)] == QRatio(q("1/2", -1), 1 - q(1))
    assert zero[(0,)] == QRatio(1)
    one = motivic_series(SymQuiver.loops(1), 3)
    assert one[(1,)] == QRatio(1, 1 - q(1))
    two = motivic_series(SymQuiver(((1, 1), (1, 0))), 2)
    assert two[(0, 0)] == QRatio(1)
    with pytest.raises(ValueError):
        motivic_series(SymQuiver.loops(1), 0)


def test_zero_quiver_dt():
    # q-binomial theorem: only d = 1 survives
    dts = dt_invariants(SymQuiver.loops(0), 5)
    assert dts[(1,)].poly == QExact.constant(1)
    assert all(dts[(d,)].poly.is_zero() for d in range(2, 6))


def test_loop_quiver_values():
    for m, seq in LOOP_QUIVER_DT.items():
        got = dt_numerical(SymQuiver.loops(m), 5)
        assert [got[(d,)] for d in range(1, 6)] == seq
    for m in range(1, 6):
        assert dt_numerical(SymQuiver.loops(m), 1)[(1,)] == 1


def test_signed_sum():
    # the alternating sum carries the parity of the exponents
    assert dt_signed(SymQuiver.loops(3), 1)[(1,)] == -1
    assert dt_signed(SymQuiver.loops(2), 1)[(1,)] == 1
    for m in (2, 3):
        s, n = dt_signed(SymQuiver.loops(m), 4), dt_numerical(SymQuiver.loops(m), 4)
        assert all(abs(s[d]) == n[d] for d in n)


def test_dt_polynomial_coefficients():
    p = DTPolynomial(q("-3/2", -1) + q("-1/2", -2))
    assert p.coefficients() == {3: 1, 1: 2}
    assert p.count() == 3 and p.signed() == -3
    with pytest.raises(DTViolation):
        DTPolynomial(q("1/3")).coefficients()


def test_two_vertex_dt_integral():
    dts = dt_invariants(SymQuiver(((2, 1), (1, 0))), 3, total=3)
    assert set(dts) == {(i, j) for i in range(4) for j in range(4) if 0 < i + j <= 3}
    assert dts[(1, 0)].count() == 1 and dts[(0, 1)].count() == 1


def _series(draw_coeffs, cutoff):
    s = MultiSeries((cutoff,))
    return s.like({(d,): QRatio(c) for d, c in draw_coeffs.items()})


laurent = st.lists(
    st.tuples(st.fractions(-2, 2, max_denominator=2).map(lambda e: Fraction(round(2 * e), 2)), st.integers(-3, 3)),
    max_size=3,
).map(lambda ts: sum((q(e, c) for e, c in ts), QExact()))


@given(st.dictionaries(st.integers(1, 4), laurent, max_size=4))
@settings(max_examples=30, deadline=None)
def test_exp_log_round_trip(coeffs):
    f = _series(coeffs, 4)
    assert pleth_log(pleth_exp(f)).coeffs == f.coeffs


@given(st.dictionaries(st.integers(1, 4), laurent, max_size=3), st.dictionaries(st.integers(1, 4), laurent, max_size=3))
@settings(max_examples=20, deadline=None)
def test_exp_additive(c1, c2):
    f, g = _series(c1, 4), _series(c2, 4)
    assert pleth_exp(f + g).coeffs == (pleth_exp(f) * pleth_exp(g)).coeffs


def test_exp_of_x():
    # Exp(x) = 1/(1 - x)
    f = _series({1: QExact.constant(1)}, 4)
    E = pleth_exp(f)
    assert all(E[(d,)] == QRatio(1) for d in range(5))


def test_motivic_log_round_trip():
    for Q in [SymQuiver.loops(2), SymQuiver(((1, 1), (1, 0)))]:
        A = motivic_series(Q, 3, total=3 if Q.n > 1 else None)
        assert pleth_exp(pleth_log(A)).coeffs == A.coeffs


def test_check_kpdt():
    Q = SymQuiver.loops(2)
    rep = check_kpdt(Q, lambda d: [-1, 1, -1, 2, -5][d[0] - 1], (0,), [(d,) for d in range(1, 6)])
    assert rep.ok and not rep.failures()
    bad = check_kpdt(Q, lambda d: 7, (0,), [(1,)])
    assert not bad.ok and bad.failures()[0][0] == (1,)


def test_shift_applies_on_vertices_only():
    Q = SymQuiver(((1, 1), (1, 0)))
    rep = check_kpdt(Q, lambda d: 0, (0, 1), [(0, 1), (1, 1)], {(0, 1): 1, (1, 1): 0})
    assert rep.ok


def test_search_empty_table_fails():
    with pytest.raises(ValueError):
        quiver_search(two_vertex_quivers(2), {}, (0, 1), {})


def test_search_finds_loop_quiver():
    cands = [SymQuiver.loops(m) for m in range(5)]
    target = {(d,): v for d, v in zip(range(1, 5), [1, 1, 3, 10])}
    res = quiver_search(cands, target, (0,), {(5,): 40})
    assert res.unique == SymQuiver.loops(3)


def test_search_reports_no_fit():
    cands = [SymQuiver.loops(m) for m in range(3)]
    res = quiver_search(cands, {(1,): 1, (2,): 7}, (0,), {})
    assert res.unique is None and not res.fits


def test_q_number_factor():
    # DT_d = [1]_q * Log coefficient
    A = motivic_series(SymQuiver.loops(1), 3)
    L = pleth_log(A)
    assert L[(1,)] * QRatio(q_num(1)) == QRatio(q("-1/2", -1))
    assert dt_invariants(SymQuiver.loops(1), 1)[(1,)].coefficients() == {1: 1}
