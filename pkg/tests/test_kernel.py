from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st
from mpmath import mpf

from thetacert.kernel import (
    DomainError,
    QPoint,
    a_cubic,
    chi,
    eta_modulus,
    f_general,
    phi,
    qpochhammer,
    theta3,
)
from thetacert.numeric import working

P50 = 240   # comfortably above 50 digits
P60 = 280


def close(x, y, digits, prec=P60):
    with working(prec):
        return abs(x - y) <= mpf(10) ** (-digits) * max(mpf(1), abs(x))


def R(x):
    return Fraction(x).limit_denominator(10 ** 12) if isinstance(x, float) else Fraction(x)


# -- phi / theta3 -------------------------------------------------------------

def test_phi_at_zero():
    v = phi(QPoint.raw(0), 100)
    assert v.mpf == 1 and v.terms_used >= 1


def test_phi_partial_sum_oracle():
    q = Fraction(1, 100)
    v = phi(QPoint.raw(q), 200)
    with working(400):
        x = mpf(1) / 100
        partial = 1 + 2 * (x + x ** 4 + x ** 9 + x ** 16)
        # the omitted terms start at 2 q^25
        assert abs(v.mpf - partial) <= 3 * x ** 25 + v.value.err_bound


@given(st.floats(min_value=-0.95, max_value=0.95))
def test_phi_matches_library_jacobi_theta(q):
    prec = 200
    v = phi(QPoint.raw(R(q)), prec)
    with working(prec):
        x = QPoint.raw(R(q)).value()
        ref = mpmath.jtheta(3, 0, x)
        assert abs(v.mpf - ref) <= v.value.err_bound + abs(ref) * mpf(2) ** -(prec + 8)


@pytest.mark.parametrize("q", ["1/2", "-9/10", "0.71", "0.99"])
def test_tail_bound_below_ulp_target(q):
    for prec in (64, 200, 800):
        for fn in (phi, chi, a_cubic):
            v = fn(QPoint.raw(q), prec)
            # the bound is relative once the value itself exceeds 1
            assert v.tail_bound <= mpf(2) ** -prec * max(mpf(1), abs(v.mpf))
            assert v.terms_used >= 1


def test_phi_domain_error():
    with pytest.raises(DomainError):
        phi(QPoint.raw(1), 100)
    with pytest.raises(DomainError):
        QPoint.raw("-1")
    with pytest.raises(DomainError):
        QPoint.exp_pi_sqrt(0)


def test_phi_gamma_form_at_sqrt3():
    v = phi(QPoint.exp_pi_sqrt(3), 400).mpf
    with working(400):
        ref = mpmath.root(3, 8) * mpmath.gamma(mpf(1) / 3) ** mpf(1.5) / (mpmath.cbrt(4) * mpmath.pi)
    assert close(v, ref, 60, 400)


def test_theta3_is_phi():
    assert theta3(QPoint.raw(0), 100).mpf == 1
    a, b = theta3(QPoint.raw("0.2"), 300), phi(QPoint.raw("0.2"), 300)
    assert a.mpf == b.mpf


def test_theta3_gamma_form_at_sqrt7():
    v = theta3(QPoint.exp_pi_sqrt(7), 400).mpf
    with working(400):
        g = mpmath.gamma
        ref = mpmath.sqrt(g(mpf(1) / 7) * g(mpf(2) / 7) * g(mpf(4) / 7)) / (
            mpmath.sqrt(2) * mpmath.root(7, 8) * mpmath.pi)
    assert close(v, ref, 60, 400)


@pytest.mark.parametrize("n", [2, 3, 5, 7, 13, Fraction(1, 2), Fraction(1, 3)])
def test_transformation_formula(n):
    lhs = phi(QPoint.exp_pi_sqrt(1 / Fraction(n)), P50).mpf
    rhs = phi(QPoint.exp_pi_sqrt(n), P50).mpf
    with working(P50):
        assert close(lhs, mpmath.root(mpf(Fraction(n).numerator) / Fraction(n).denominator, 4) * rhs, 50, P50)


@given(st.sampled_from([64, 100, 333]), st.fractions(min_value=0, max_value=Fraction(9, 10),
                                                      max_denominator=1000))
def test_phi_consistent_across_precisions(p1, q):
    a, b = phi(QPoint.raw(q), p1), phi(QPoint.raw(q), 4 * p1)
    with working(4 * p1):
        assert abs(a.mpf - b.mpf) <= mpf(2) ** -(p1 - 16)


def test_qpoint_power():
    assert QPoint.exp_pi_sqrt(3).power(3) == QPoint.exp_pi_sqrt(27)
    assert QPoint.raw("1/2").power(3) == QPoint.raw("1/8")


# -- f(a, b) and the triple product -----------------------------------------

def test_f_general_basic_values():
    assert f_general(0, 0, 100).mpf == 1
    q = Fraction(3, 10)
    assert close(f_general(q, q, P50).mpf, phi(QPoint.raw(q), P50).mpf, 60, P50)
    with pytest.raises(DomainError):
        f_general(2, Fraction(1, 2), 100)


def _product_form(a, b, prec):
    ab = a * b
    return (qpochhammer(-a, ab, prec).mpf * qpochhammer(-b, ab, prec).mpf
            * qpochhammer(ab, ab, prec).mpf)


def test_f_general_product_oracle():
    prec = 300
    with working(prec):
        a, b = mpf("0.1"), mpf("0.2")
        ref = mpmath.qp(-a, a * b) * mpmath.qp(-b, a * b) * mpmath.qp(a * b, a * b)
        assert close(f_general(a, b, prec).mpf, ref, 80, prec)


def test_jacobi_triple_product_grid():
    grid = [Fraction(-89, 100) + Fraction(178, 900) * i for i in range(10)]
    count = 0
    for a in grid:
        for b in grid:
            assert abs(a * b) <= Fraction(8, 10)
            with working(P50):
                am, bm = mpf(a.numerator) / a.denominator, mpf(b.numerator) / b.denominator
                lhs = f_general(am, bm, P50).mpf
                rhs = _product_form(am, bm, P50)
            assert close(lhs, rhs, 50, P50), (a, b)
            count += 1
    assert count == 100


def test_qpochhammer_against_library():
    prec = 300
    with working(prec):
        for a, q in [("0.3", "0.5"), ("-0.7", "0.2"), ("0.5", "-0.6")]:
            ref = mpmath.qp(mpf(a), mpf(q))
            assert close(qpochhammer(mpf(a), mpf(q), prec).mpf, ref, 80, prec)


# -- splitting identities ------------------------------------------------------

def _f(a, b, prec):
    return f_general(a, b, prec).mpf


def _phi(x, prec):
    return phi(QPoint.raw(x), prec).mpf


@given(st.floats(min_value=0.01, max_value=0.9))
def test_degree_nine_splitting(q):
    with working(P50):
        x = mpf(R(q).numerator) / R(q).denominator
        lhs = _phi(x, P50)
        rhs = _phi(x ** 9, P50) + 2 * x * _f(x ** 3, x ** 15, P50)
        assert close(lhs, rhs, 50, P50)


@given(st.floats(min_value=0.05, max_value=0.95))
def test_quintic_first_splitting(t):
    # phi(q^{1/5}) - phi(q^5) at q = t^5, so q^{1/5} = t and q^{4/5} = t^4
    with working(P50):
        x = mpf(R(t).numerator) / R(t).denominator
        lhs = _phi(x, P50) - _phi(x ** 25, P50)
        rhs = 2 * x * _f(x ** 15, x ** 35, P50) + 2 * x ** 4 * _f(x ** 5, x ** 45, P50)
        assert close(lhs, rhs, 50, P50)


@given(st.floats(min_value=0.01, max_value=0.8))
def test_quintic_product_splitting(q):
    with working(P50):
        x = mpf(R(q).numerator) / R(q).denominator
        lhs = _phi(x, P50) ** 2 - _phi(x ** 5, P50) ** 2
        rhs = 4 * x * _f(x, x ** 9, P50) * _f(x ** 3, x ** 7, P50)
        assert close(lhs, rhs, 50, P50)


@given(st.floats(min_value=0.01, max_value=0.8))
def test_quintic_fifth_power_splitting(q):
    with working(P50):
        x = mpf(R(q).numerator) / R(q).denominator
        p1, p5 = _phi(x, P50), _phi(x ** 5, P50)
        lhs = 32 * x * _f(x ** 3, x ** 7, P50) ** 5 + 32 * x ** 4 * _f(x, x ** 9, P50) ** 5
        rhs = (p1 ** 2 / p5 - p5) * (p1 ** 4 - 4 * p1 ** 2 * p5 ** 2 + 11 * p5 ** 4)
        assert close(lhs, rhs, 50, P50)


@given(st.floats(min_value=0.05, max_value=0.95))
def test_septic_splitting(t):
    with working(P50):
        x = mpf(R(t).numerator) / R(t).denominator
        lhs = _phi(x, P50) - _phi(x ** 49, P50)
        rhs = (2 * x * _f(x ** 35, x ** 63, P50) + 2 * x ** 4 * _f(x ** 21, x ** 77, P50)
               + 2 * x ** 9 * _f(x ** 7, x ** 91, P50))
        assert close(lhs, rhs, 50, P50)


# -- chi, a(q), eta ------------------------------------------------------------

def test_chi_basic_values():
    assert chi(QPoint.raw(0), 100).mpf == 1
    prec = 300
    c = chi(QPoint.exp_pi_sqrt(1), prec).mpf
    with working(prec):
        q = mpmath.exp(-mpmath.pi)
        assert close(c / (mpmath.root(2, 4) * mpmath.root(q, 24)), mpf(1), 80, prec)


def test_chi_direct_product_oracle():
    prec = 300
    v = chi(QPoint.raw("0.3"), prec)
    with working(prec):
        x = mpf(3) / 10
        direct = mpmath.fprod(1 + x ** (2 * k + 1) for k in range(50))
        # factors k >= 50 change the product by at most 2 * 0.3^101
        assert abs(v.mpf - direct) <= 4 * x ** 101 + v.value.err_bound


def test_a_cubic_basic_values():
    assert a_cubic(QPoint.raw(0), 100).mpf == 1
    prec = 300
    a = a_cubic(QPoint.exp_pi_sqrt(4), prec).mpf
    p = phi(QPoint.exp_pi_sqrt(1), prec).mpf
    with working(prec):
        ref = mpmath.root(mpf(1) / 4 + 1 / (2 * mpmath.sqrt(3)), 4)
        assert close(a / p ** 2, ref, 80, prec)


def test_a_cubic_brute_force_lattice():
    prec = 250
    v = a_cubic(QPoint.raw("0.05"), prec)
    with working(prec):
        x = mpf(5) / 100
        brute = mpmath.fsum(x ** (m * m + m * n + n * n)
                            for m in range(-40, 41) for n in range(-40, 41))
        assert abs(v.mpf - brute) <= v.value.err_bound + mpf(10) ** -70


@given(st.floats(min_value=0.01, max_value=0.9))
def test_a_cubic_theta_decomposition(q):
    # a(q) = phi(q) phi(q^3) + 4 q psi(q^2) psi(q^6), psi(q) = sum_{n>=0} q^{n(n+1)/2}
    prec = 200
    v = a_cubic(QPoint.raw(R(q)), prec).mpf
    with working(prec):
        x = mpf(R(q).numerator) / R(q).denominator

        def psi(y):
            return mpmath.nsum(lambda n: y ** (n * (n + 1) / 2), [0, mpmath.inf])

        ref = _phi(x, prec) * _phi(x ** 3, prec) + 4 * x * psi(x ** 2) * psi(x ** 6)
        assert close(v, ref, 50, prec)


def test_eta_leading_behaviour_large_m():
    prec = 200
    e = eta_modulus(100, False, prec).value
    with working(prec):
        lead = mpmath.exp(-2 * mpmath.pi * 10 / 24)
        ratio = e / lead
        assert abs(ratio - 1) <= 2 * mpmath.exp(-2 * mpmath.pi * 10)


def test_eta_direct_product_oracle():
    prec = 300
    e = eta_modulus(1, False, prec).value
    with working(prec):
        x = mpmath.exp(-2 * mpmath.pi)
        direct = mpmath.exp(-2 * mpmath.pi / 24) * mpmath.fprod(1 - x ** k for k in range(1, 61))
        assert close(e, direct, 80, prec)


def test_eta_half_shift_uses_signed_q():
    prec = 300
    e = eta_modulus(37, True, prec).value
    with working(prec):
        x = mpmath.exp(-mpmath.pi * mpmath.sqrt(37))
        ref = mpmath.exp(-mpmath.pi * mpmath.sqrt(37) / 24) * abs(mpmath.qp(-x, -x))
        assert close(e, ref, 80, prec)


def test_eta_domain():
    with pytest.raises(DomainError):
        eta_modulus(0, False, 100)
