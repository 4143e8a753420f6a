import json
from fractions import Fraction
from itertools import combinations

import pytest

from genhurwitz.cutjoin import build_w
from genhurwitz.errors import DegreeMismatchError
from genhurwitz.genfun import (
    GenFunSeries,
    MarkedProfile,
    direct_series,
    evolve,
    grading_failures,
    initial_k0,
    initial_k0_from_schur,
    initial_k1,
    initial_k1_from_schur,
    initial_value,
    make_marks,
    pde_residual,
    phi_coefficient,
)
from genhurwitz.hurwitz import CoverSpec, hurwitz_oracle
from genhurwitz.laurent import ZLaurent
from genhurwitz.partitions import Partition, partitions_of
from genhurwitz.poly import Monomial, PPoly, p

P = Partition
F = Fraction


def zl(c, e):
    return ZLaurent.monomial(c, e)


def test_initial_k0_examples():
    assert initial_k0(1) == p(1).scale(zl(1, -2))
    assert initial_k0(3) == p(1, 1, 1).scale(zl(F(1, 6), -6))
    assert initial_k0(2) == p(1, 1).scale(zl(F(1, 2), -4))


def test_initial_k1_examples():
    assert initial_k1(1) == PPoly({Monomial(P((1,)), P((1,))): zl(1, -2)})
    assert initial_k1(2) == PPoly(
        {
            Monomial(P((1, 1)), P((1, 1))): zl(F(1, 2), -4),
            Monomial(P((2,)), P((2,))): zl(F(1, 2), -2),
        }
    )
    got = {(tuple(m.p), c.single_term()) for m, c in initial_k1(3).items()}
    assert got == {
        ((1, 1, 1), (-6, F(1, 6))),
        ((2, 1), (-4, F(1, 2))),
        ((3,), (-2, F(1, 3))),
    }


@pytest.mark.parametrize("d", range(1, 7))
def test_initial_values_from_schur(d):
    assert initial_k0(d) == initial_k0_from_schur(d)
    assert initial_value(0, d) == initial_k0(d)
    if d <= 5:
        assert initial_k1(d) == initial_k1_from_schur(d)
        assert initial_value(0, d, 1) == initial_k1(d)


def test_example_series_d3():
    s = evolve(initial_k0(3), make_marks([P((2, 1))]), [3])
    expected = {
        ((0,), P((1, 1, 1)), zl(F(1, 6), -6)),
        ((1,), P((2, 1)), zl(F(1, 2), -4)),
        ((2,), P((3,)), zl(F(1, 2), -2)),
        ((2,), P((1, 1, 1)), zl(F(1, 4), -4)),
        ((3,), P((2, 1)), zl(F(3, 4), -2)),
    }
    assert {(v, m.p, c) for v, m, c in s.terms()} == expected
    assert str(s) == (
        "1/6*z^-6*p_(1,1,1) + 1/2*u*z^-4*p_(2,1) + 1/2*u^2*z^-2*p_(3) "
        "+ 1/4*u^2*z^-4*p_(1,1,1) + 3/4*u^3*z^-2*p_(2,1)"
    )


def test_example_series_d2():
    s = evolve(initial_k0(2), make_marks([P((2,))]), [3])
    assert s[0] == p(1, 1).scale(zl(F(1, 2), -4))
    assert s[1] == p(2).scale(zl(F(1, 2), -2))
    assert s[2] == p(1, 1).scale(zl(F(1, 4), -2))
    assert s[3] == p(2).scale(zl(F(1, 12), 0))


def test_no_marks_is_initial():
    s = evolve(initial_k1(3), [], [])
    assert s[()] == initial_k1(3)
    assert s.k == 1
    assert pde_residual(direct_series(0, 3, make_marks([P((3,))]), [0]), 0) == {}


def test_evolve_rejects_inhomogeneous():
    with pytest.raises(DegreeMismatchError):
        evolve(p(2) + p(1), make_marks([P((2,))]), [2])


def test_phi_coefficient_examples():
    t = P((2, 1))
    assert phi_coefficient(0, 3, [(t, 2)], [], P((3,))) == zl(F(1, 2), -2)
    assert phi_coefficient(0, 3, [(t, 2)], [], P((1, 1, 1))) == zl(F(1, 4), -4)
    assert phi_coefficient(0, 3, [(t, 0)], [], P((1, 1, 1))) == zl(F(1, 6), -6)
    assert phi_coefficient(0, 3, [(t, 1)], [], P((3,))) == ZLaurent()


def test_phi_coefficient_many_alphabets():
    t, c3 = P((2, 1)), P((3,))
    spec = CoverSpec(0, 3, (t, t, c3, c3))
    assert phi_coefficient(0, 3, [(t, 2)], [c3], c3) == zl(hurwitz_oracle(spec) / 2, 0)
    # 2h-2 is odd here, so the coefficient vanishes
    assert phi_coefficient(0, 3, [(t, 1)], [t, t], c3) == ZLaurent()


@pytest.mark.parametrize("d", range(1, 5))
@pytest.mark.parametrize("k", [0, 1])
def test_evolve_matches_direct(d, k):
    init = initial_k0(d) if k == 0 else initial_k1(d)
    for part in partitions_of(d):
        marks = make_marks([part])
        assert evolve(init, marks, [4]).same_coefficients(direct_series(0, d, marks, [4], k))
    for pair in combinations(partitions_of(d), 2):
        marks = make_marks(list(pair))
        assert evolve(init, marks, [3, 3]).same_coefficients(direct_series(0, d, marks, [3, 3], k))


@pytest.mark.parametrize("d", range(1, 5))
def test_pde_and_grading_on_direct_series(d):
    for k in (0, 1):
        for pair in combinations(partitions_of(d), 2):
            s = direct_series(0, d, make_marks(list(pair)), [4, 4], k)
            assert not grading_failures(s)
            for i in range(2):
                res = pde_residual(s, i)
                assert res and not any(res.values())


def test_pde_detects_a_wrong_series():
    s = direct_series(0, 3, make_marks([P((2, 1))]), [3])
    coeffs = dict(s.coefficients)
    coeffs[(2,)] = coeffs[(2,)] + p(3).scale(zl(1, -2))
    broken = GenFunSeries(0, 3, s.marks, 0, s.orders, coeffs)
    res = pde_residual(broken, 0)
    assert res[(1,)] and res[(2,)]
    assert not res[(0,)]


@pytest.mark.parametrize("g", [1, 2])
def test_higher_genus_evolution(g):
    marks = make_marks([P((2, 1)), P((3,))])
    s = evolve(initial_value(g, 3), marks, [3, 3], genus=g)
    assert s.same_coefficients(direct_series(g, 3, marks, [3, 3]))
    assert not grading_failures(s)


def test_series_json_roundtrip():
    s = evolve(initial_k1(3), make_marks([P((2, 1)), P((3,))]), [2, 2])
    data = json.dumps(s.to_json(), sort_keys=True)
    back = GenFunSeries.from_json(json.loads(data))
    assert back.same_coefficients(s)
    assert json.dumps(back.to_json(), sort_keys=True) == data


def test_marks_labels():
    assert [m.label for m in make_marks([P((2,))])] == ["u"]
    assert [m.label for m in make_marks([P((2,)), P((1, 1))])] == ["u1", "u2"]
    assert MarkedProfile("v", (1, 2)).partition == (2, 1)


def test_direct_series_rejects_many_alphabets():
    with pytest.raises(ValueError):
        direct_series(0, 2, make_marks([P((2,))]), [1], k=2)


def test_operator_cache_shared_with_series():
    assert build_w(3, P((2, 1))) is build_w(3, (2, 1))
