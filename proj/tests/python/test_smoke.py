from fractions import Fraction as F

import pytest

import ramicalc as rc


def degree4_profile():
    return rc.EndoClassProfile(
        2, 4, 4, 1, F(1, 2), F(-1, 4),
        [rc.TowerLevel(F(1, 4), 4, 4, 5), rc.TowerLevel(F(1, 2), 2, 2, 1)],
    )


def degree4_decomposition():
    return rc.GaloisDecomposition(4, [(1, 0)] + [(3, 1)] * 5)


def test_degree_four_example():
    b = rc.HerbrandBundle(degree4_profile(), degree4_decomposition())
    assert b.phi(0) == F(5, 16)
    assert b.psi.slopes() == [F(1, 4), 4, 2, 1]
    assert b.psi.breakpoints == [(0, 0), (F(1, 3), F(1, 12)), (F(3, 8), F(1, 4)), (F(1, 2), F(1, 2))]
    assert all(isinstance(y, F) for _, y in b.psi.breakpoints)
    assert rc.transfer_radius(b.psi, F(1, 3)) == F(1, 12)
    assert rc.certify(b.psi) == {"convex": False, "strictly_increasing": True}


def test_function_algebra():
    f = rc.PLFunction([(0, F(2, 9)), (F(1, 3), F(1, 3))], 1)
    assert rc.compose(rc.invert(f), f) == rc.PLFunction.identity()
    assert rc.scale_conj(f, 2)(0) == F(4, 9)
    assert rc.agree_from(f, rc.PLFunction.identity()) == F(1, 3)
    assert rc.derivative_jumps(f) == [(F(1, 3), F(1, 3), 1)]
    assert rc.from_csv(rc.to_csv(f)) == f


def test_lift_and_interpolation():
    p = rc.minimal_profile(1, 3, 3)
    lifted = rc.tame_lift_structure(p, 2)
    assert lifted.m == F(2, 3)
    assert lifted.tower[0].c == 4

    b = rc.HerbrandBundle(degree4_profile(), degree4_decomposition())
    xs = [F(1, 4), F(5, 16), F(21, 64), F(65, 192), F(11, 32), F(23, 64), F(25, 64), F(7, 16), F(1, 2)]
    samples = [(x.denominator, x.numerator, x.denominator * b.psi(x)) for x in xs]
    out = rc.interpolate_psi(samples, F(1, 2), [F(1, 3), F(3, 8)])
    assert out["issues"] == []
    assert out["psi"] == b.psi
    assert rc.boundary_slopes_check(b.psi, 2, 2, F(1, 2)) == []


def test_errors_and_exactness():
    with pytest.raises(rc.ValidationError):
        rc.GaloisDecomposition(2, [(1, 0), (2, 1)])
    with pytest.raises(rc.DomainError):
        rc.PLFunction.identity()(-1)
    with pytest.raises(TypeError):
        rc.PLFunction.identity()(0.5)
    report = rc.validate_ultrametric(["a", "b", "c"], [[0, 3, 1], [3, 0, 1], [1, 1, 0]])
    assert ("a", "c", "b") in report["triangle_violations"]
