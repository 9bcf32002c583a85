from fractions import Fraction as F

from conecalc.univariate import (
    integrate_interval,
    interval_extrema,
    one_minus_t2_power,
    pderiv,
    peval,
    pmul,
    ppow,
    real_roots,
    trim,
)


def test_basic_arithmetic():
    p = [F(1), F(2)]
    assert ppow(p, 2) == pmul(p, p) == [1, 4, 4]
    assert pderiv([F(1), F(2), F(3)]) == [2, 6]
    assert pderiv([F(1), F(2), F(3)], 2) == [6]
    assert trim([F(1), F(0), F(0)]) == [1]
    assert peval([F(1), F(0), F(-1)], F(1, 2)) == F(3, 4)


def test_integrals():
    assert integrate_interval([F(0), F(0), F(1)]) == F(2, 3)
    assert integrate_interval([F(0), F(1)]) == 0
    assert one_minus_t2_power(2) == [1, 0, -2, 0, 1]


def test_real_roots():
    p = pmul([F(-1, 3), F(1)], [F(1, 2), F(1)])  # roots 1/3, -1/2
    roots = real_roots(p, F(-1), F(1), F(1, 2**40))
    assert len(roots) == 2
    assert abs(roots[0] + F(1, 2)) < F(1, 2**39) and abs(roots[1] - F(1, 3)) < F(1, 2**39)


def test_interval_extrema():
    (tmin, vmin), (tmax, vmax) = interval_extrema([F(0), F(0), F(3)])
    assert vmin == 0 and tmin == 0 and vmax == 3
    # t^3 - t has extrema at +-1/sqrt(3)
    (_, vmin), (_, vmax) = interval_extrema([F(0), F(-1), F(0), F(1)])
    expect = 2 / (3 * 3**0.5)
    assert abs(float(vmax) - expect) < 1e-12 and abs(float(vmin) + expect) < 1e-12
