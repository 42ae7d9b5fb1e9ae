from fractions import Fraction

import mpmath as mp
import pytest

from gafunc.poly import Poly
from gafunc.roots import aberth_roots, extract_roots
from gafunc.scalars import working


def P(*coeffs):
    return Poly.make([Fraction(c) for c in coeffs])


def test_ex1_roots():
    rs = extract_roots(P(4, 8, 8, 4, 1), 50)
    assert len(rs) == 2
    assert rs.total_degree == 4
    assert rs.max_multiplicity == 2
    with working(50):
        vals = sorted((e.value for e in rs), key=lambda z: mp.im(z))
        assert abs(vals[0] - mp.mpc(-1, -1)) < mp.mpf(10) ** -48
        assert abs(vals[1] - mp.mpc(-1, 1)) < mp.mpf(10) ** -48
    for e in rs:
        assert e.multiplicity == 2
        assert not e.is_real
        assert e.conjugate_partner is not None


def test_conjugate_pairs_exactly_symmetrized():
    rs = extract_roots(P(4, 8, 8, 4, 1), 50)
    a, b = rs.entries
    assert a.value == mp.conj(b.value)


def test_rational_roots_are_exact():
    # (x - 5)^4 (x - 3)^3 (x - 1)
    mu = P(16875, -47250, 53550, -32890, 12132, -2774, 386, -30, 1)
    rs = extract_roots(mu, 50)
    got = {(e.exact, e.multiplicity) for e in rs}
    assert got == {(1, 1), (3, 3), (5, 4)}
    for e in rs:
        assert e.is_real
        assert mp.im(e.value) == 0


def test_roots_sorted_by_multiplicity_then_value():
    mu = P(16875, -47250, 53550, -32890, 12132, -2774, 386, -30, 1)
    rs = extract_roots(mu, 50)
    assert [e.multiplicity for e in rs] == [1, 3, 4]


def test_fractional_rational_root():
    # (2x - 1)(x + 3) = 2x^2 + 5x - 3
    rs = extract_roots(P(-3, 5, 2), 50)
    assert {e.exact for e in rs} == {Fraction(1, 2), Fraction(-3)}


def test_irrational_real_roots():
    rs = extract_roots(P(-2, 0, 1), 50)  # x^2 - 2
    with working(50):
        vals = sorted(mp.re(e.value) for e in rs)
        assert abs(vals[1] - mp.sqrt(2)) < mp.mpf(10) ** -48
    assert all(e.is_real and e.exact is None for e in rs)


def test_high_degree_irreducible_factor():
    # the degree-6 irreducible factor from the 8x8 fixture
    f = P(-4743, -198, 543, 124, 39, 10, 1)
    rs = extract_roots(f, 50)
    assert rs.total_degree == 6
    with working(50):
        for e in rs:
            assert abs(f.eval_mpc(e.value)) < mp.mpf(10) ** -40


def test_aberth_on_wilkinson_like():
    # roots 1..8, well known to be touchy in double precision
    p = P(1)
    for r in range(1, 9):
        p = p * P(-r, 1)
    roots = aberth_roots(p, 50)
    with working(50):
        got = sorted(mp.re(z) for z in roots)
        for r, z in zip(range(1, 9), got):
            assert abs(z - r) < mp.mpf(10) ** -45


def test_degree_zero_rejected():
    with pytest.raises(ValueError):
        extract_roots(P(3), 50)


def test_precision_tracks_request():
    rs = extract_roots(P(-2, 0, 1), 30)
    assert rs.precision == 30
