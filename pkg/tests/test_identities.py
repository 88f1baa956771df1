import json
import os
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st
from mpmath import mpf

from thetacert.closed import EvaluationError, eval_closed, parse_closed
from thetacert.identities import (
    FAMILIES,
    REPORT_FIELDS,
    NotFound,
    PValue,
    a_ratio,
    a_ratio_direct,
    check_identity,
    cubic_system_check,
    direct_quotient,
    e37_subchecks,
    gamma_eval_residual,
    get_identity,
    load_catalog,
    p_value,
    parse_catalog,
    quintic_roots,
    quintic_system_check,
    ratio_25n,
    ratio_3n,
    ratio_5n,
    ratio_9n,
    s_argument,
    s_of_p,
    septic_system_check,
    working_bits,
)
from thetacert.kernel import DomainError
from thetacert.numeric import InvalidArgument, PrecReal, working

PREC = 400
TABLE1_N = [Fraction(1, 3), 1, 3, 5, 7, 9, 13, 17, 25, 37, 49, 85, 11, 27, 81]
TABLE2_N = [Fraction(1, 5), 1, 3, 7, 9, 13, 49, 5, 25]
LABELLED_COROLLARIES = [
    "cor:3sqrt3",
    "cor:3",
    "cor:9",
    "cor:9sqrt3",
    "cor:3sqrt5",
    "cor:9sqrt5",
    "cor:3sqrt7",
    "cor:9sqrt7",
    "cor:27",
    "cor:3sqrt13",
    "cor:9sqrt13",
    "cor:3sqrt17",
    "cor:9sqrt17",
    "cor:3:15",
    "cor:45",
    "cor:3sqrt37",
    "cor:9sqrt37",
    "cor:21",
    "cor:63",
    "cor:3sqrt85",
    "cor:9sqrt85",
    "cor:3sqrt11",
    "cor:9sqrt11",
    "cor:27sqrt3",
    "cor:81",
    "cor:sqrt5s3",
    "cor:sqrt7s3",
    "cor:5sqrt5",
    "cor:5",
    "cor:25",
    "cor:5sqrt3",
    "cor:25sqrt3",
    "cor:5sqrt7",
    "cor:25sqrt7",
    "cor:5:15",
    "cor:75",
    "cor:5sqrt13",
    "cor:25sqrt13",
    "cor:35",
    "cor:175",
    "cor:G125",
    "cor:G625",
    "cor:25sqrt5",
    "cor:125",
]


def rel_close(x, y, digits, prec=PREC):
    with working(prec):
        return abs(x - y) <= mpf(10) ** (-digits) * max(mpf(1), abs(x))


def closed(text, prec=PREC):
    return eval_closed(parse_closed(text), prec).value


# -- catalog --------------------------------------------------------------------

def test_catalog_shape():
    cat = load_catalog()
    ids = [r.id for r in cat]
    assert len(ids) >= 60
    assert len(set(ids)) == len(ids)
    assert {r.family for r in cat} <= set(FAMILIES)
    assert sum(r.family == "gamma" for r in cat) == 7


def test_catalog_completeness():
    ids = {r.id for r in load_catalog()}
    missing = [c for c in LABELLED_COROLLARIES if c not in ids]
    assert not missing
    assert "thm:enigmatic" in ids
    for name in ("eq:e3", "eq:e5", "eq:e7", "eq:e11", "eq:e13", "eq:e17", "thm:e37",
                 "eq:SelbergChowla", "eq:e37"):
        assert name in ids
    # the alternative forms given in prose
    for alt in ("cor:45:alt", "cor:5sqrt7:alt", "cor:5sqrt5:alt"):
        assert alt in ids
    # the nine corollaries of the a(q) theorem
    assert sum(1 for i in ids if i.startswith("cor:a:") and not i.endswith(":alt")) == 9
    # every quotient theorem instance behind the two overview tables
    for n in TABLE1_N:
        assert f"thm:3n@{n}" in ids and f"thm:9n@{n}" in ids
    for n in TABLE2_N:
        assert f"thm:5n@{n}" in ids and f"thm:25n@{n}" in ids


def test_default_digits_policy():
    for rec in load_catalog():
        assert rec.default_digits == (40 if rec.family in ("gamma", "eta") else 50), rec.id


def test_catalog_parser_rejects_bad_lines():
    with pytest.raises(ValueError):
        parse_catalog("a\t1\t1\tradical | x\na\t1\t1\tradical | y\n")
    with pytest.raises(ValueError):
        parse_catalog("a\t1\t1\n")
    with pytest.raises(ValueError):
        parse_catalog("a\t(proc no-such-proc 1)\t1\tradical | x\n")


def test_catalog_path_override(tmp_path, monkeypatch):
    path = tmp_path / "mini.tsv"
    path.write_text("# tiny catalog\n"
                    "two\t(sqrt 4)\t2\tradical | sqrt 4\n"
                    "broken\t(sqrt (sub 1 2))\t1\tradical | negative radicand\n"
                    "wrong\t(sqrt 2)\t(div 141421356 100000000)\tradical | truncated\n",
                    encoding="utf-8")
    monkeypatch.setenv("THETA_CATALOG", str(path))
    assert [r.id for r in load_catalog()] == ["two", "broken", "wrong"]
    assert check_identity("two").status == "pass"
    rep = check_identity("broken")
    assert rep.status == "error" and rep.lhs_value == "NaN" and "radicand" in rep.cause
    rep = check_identity("wrong")
    assert rep.status == "fail" and rep.digits_certified == 8


def test_unknown_identity():
    with pytest.raises(NotFound):
        get_identity("nonexistent")
    with pytest.raises(NotFound):
        check_identity("nonexistent", 50)


def test_digits_must_be_positive():
    with pytest.raises(InvalidArgument):
        check_identity("cor:3", 0)


# -- check_identity ----------------------------------------------------------------

@pytest.mark.parametrize("ident", ["cor:3sqrt3", "thm:enigmatic", "cor:5", "cor:5sqrt13"])
def test_verification_at_sixty_digits(ident):
    rep = check_identity(ident, 60)
    assert rep.status == "pass", rep.cause
    assert rep.digits_certified >= 60


def test_working_precision_schedule():
    assert working_bits(50) == 231
    assert working_bits(1) == 68


def test_report_schema_and_status_rule():
    rep = check_identity("cor:3", 50)
    d = rep.to_dict()
    assert tuple(d) == REPORT_FIELDS
    assert set(d) == {"id", "lhs_value", "rhs_value", "abs_residual", "digits_requested",
                      "digits_certified", "status", "elapsed_ms"}
    json.dumps(d)
    assert d["status"] == ("pass" if d["digits_certified"] >= d["digits_requested"] else "fail")
    assert isinstance(d["elapsed_ms"], int) and d["elapsed_ms"] >= 0


def test_report_decimals_round_trip_to_working_precision():
    rep = check_identity("cor:3", 50)
    rec = get_identity("cor:3")
    bits = working_bits(50)
    lhs = rec.lhs.evaluate(bits)
    with working(bits):
        parsed = mpf(rep.lhs_value)
        assert abs(parsed - lhs) <= abs(lhs) * mpf(10) ** -(len(rep.lhs_value) - 4)
    assert len(rep.lhs_value) > 60


def test_negative_control_flips_to_fail():
    rep = check_identity("cor:3", 50, perturb="1e-30")
    assert rep.status == "fail"
    assert 29 <= rep.digits_certified <= 30
    assert rep.abs_residual.startswith("1.0000") and rep.abs_residual.endswith("E-30")


def test_both_precisions_agree_for_every_catalog_entry():
    # a coincidence at the first precision would be exposed by the second
    for rec in load_catalog():
        a = check_identity(rec, 30)
        assert a.status == "pass", (rec.id, a.cause)


# -- p, the s(p) map and the quotient theorems ---------------------------------

def test_p_examples():
    with working(PREC):
        r5, r3, r2 = mpmath.sqrt(5), mpmath.sqrt(3), mpmath.sqrt(2)
        assert rel_close(p_value("quintic", Fraction(1, 5), PREC).value.value, r5 - 1, 80)
        assert rel_close(s_argument(1, PREC).value, r5 + 1, 80)
        assert rel_close(p_value("quintic", Fraction(1, 25), PREC).value.value, r5 + 1, 80)
        assert rel_close(p_value("cubic", 1, PREC).value.value, r2 * r2 / (1 + r3), 80)


@pytest.mark.parametrize("family,n", [("cubic", 1), ("cubic", Fraction(1, 3)), ("cubic", 37),
                                      ("quintic", 1), ("quintic", Fraction(1, 5)), ("quintic", 13),
                                      ("septic", 1), ("septic", Fraction(1, 7)), ("septic", 2)])
def test_p_invariants_match_direct_products(family, n):
    pv = p_value(family, n, PREC)
    assert pv.value.value > 0
    assert rel_close(pv.value.value, pv.direct.value, 50)


def test_pvalue_rejects_nonpositive():
    with pytest.raises(DomainError):
        PValue("cubic", PrecReal(mpf(-1), 100))
    with pytest.raises(InvalidArgument):
        PValue("octic", PrecReal(mpf(1), 100))


def test_quotient_theorem_examples():
    assert rel_close(ratio_3n(1, PREC).value, closed("(div 1 (nthroot 4 (sub (mul 6 (sqrt 3)) 9)))"), 60)
    assert rel_close(ratio_9n(1, PREC).value,
                     closed("(div (add 1 (nthroot 3 (mul 2 (add (sqrt 3) 1)))) 3)"), 60)
    assert rel_close(ratio_5n(1, PREC).value,
                     closed("(div 1 (sqrt (sub (mul 5 (sqrt 5)) 10)))"), 60)
    assert rel_close(ratio_25n(1, PREC).value, closed(
        "(div (add 1 (nthroot 5 (mul 8 (add (mul 3 (cos 1/5)) (sin 1/5))))"
        " (nthroot 5 (mul 8 (sub (mul 3 (cos 1/5)) (sin 1/5))))) 5)"), 60)


@pytest.mark.parametrize("n", TABLE1_N)
def test_cubic_quotient_theorems_match_kernel(n):
    assert rel_close(ratio_3n(n, PREC).value, direct_quotient(3, n, PREC).value, 50)
    assert rel_close(ratio_9n(n, PREC).value, direct_quotient(9, n, PREC).value, 50)


@pytest.mark.parametrize("n", TABLE2_N)
def test_quintic_quotient_theorems_match_kernel(n):
    assert rel_close(ratio_5n(n, PREC).value, direct_quotient(5, n, PREC).value, 50)
    assert rel_close(ratio_25n(n, PREC).value, direct_quotient(25, n, PREC).value, 50)


def test_s_of_p_special_points():
    with working(PREC):
        tiny = PrecReal(mpf(10) ** -60, PREC)
        assert abs(s_of_p(tiny).value - mpf(1) / 5) < mpf(10) ** -10
        p = PrecReal.from_mpf(mpmath.sqrt(5) - 1, PREC)
    # phi(e^{-5 pi sqrt5}) / phi(e^{-pi sqrt5}) = 5^{1/4} s(sqrt5 - 1)
    with working(PREC):
        assert rel_close(mpmath.root(5, 4) * s_of_p(p).value, direct_quotient(5, 5, PREC).value, 60)


def test_s_of_p_domain():
    with pytest.raises(DomainError):
        s_of_p(PrecReal(mpf(0), 100))
    with pytest.raises(InvalidArgument):
        s_of_p(2)


@given(st.floats(min_value=0.001, max_value=1000))
def test_s_of_p_radicands_stay_nonnegative(p):
    v = s_of_p(PrecReal(mpf(p), 100))
    assert v.value > mpf(1) / 5


@pytest.mark.parametrize("n", [Fraction(1, 3), 1, 3, 5, 7, 9, 25, 49, 81])
def test_a_theorem_matches_kernel(n):
    assert rel_close(a_ratio(n, PREC).value, a_ratio_direct(n, PREC).value, 50)


def test_a_theorem_examples():
    assert rel_close(a_ratio(1, PREC).value, closed("(nthroot 4 (add 1/4 (div 1 (mul 2 (sqrt 3)))))"), 60)
    assert rel_close(a_ratio(3, PREC).value,
                     closed("(div (mul (pow 3 3/4) (add 1 (pow 2 2/3))) 6)"), 60)
    # before the transformation formula: a(e^{-2 pi/sqrt3}) / phi^2(e^{-pi sqrt3}) = 3^{3/4}/2
    with working(PREC):
        moved = a_ratio(Fraction(1, 3), PREC).value * mpmath.sqrt(3)
    assert rel_close(moved, closed("(div (pow 3 3/4) 2)"), 60)


# -- gamma evaluations -------------------------------------------------------------

@pytest.mark.parametrize("name", ["e3", "e5", "e7", "e11", "e13", "e17", "e37"])
def test_gamma_evaluations(name):
    assert gamma_eval_residual(name, PREC).value < mpf(10) ** -40


def test_gamma_e3_to_fifty_digits():
    assert gamma_eval_residual("e3", PREC).value < mpf(10) ** -50


def test_selberg_chowla_subchecks():
    subs = e37_subchecks(PREC)
    assert set(subs) == {"eq:e37", "eq:SelbergChowla"}
    for v in subs.values():
        assert v.value < mpf(10) ** -40


def test_unknown_gamma_name():
    with pytest.raises(NotFound):
        gamma_eval_residual("e19", 100)


# -- theta systems ---------------------------------------------------------------

SYS_PREC = 240


def test_cubic_system_at_point():
    chk = cubic_system_check(0.3, SYS_PREC)
    assert chk.ok(mpf(10) ** -60)
    assert set(chk.residuals) == {"i", "ii", "iii", "iv_v"}


def test_cubic_system_small_q_limit():
    chk = cubic_system_check(mpf("0.001"), SYS_PREC)
    u, p = chk.info["u"], chk.info["p"]
    with working(SYS_PREC):
        assert abs(u / (2 * mpf("0.001")) - 1) < mpf("1e-5")
        assert p ** 3 < mpf("1e-7")


def test_quintic_system_at_point():
    chk = quintic_system_check(0.25, SYS_PREC)
    assert chk.ok(mpf(10) ** -60), chk.failures
    assert chk.info["u_gt_v"]
    assert chk.info["discriminant"] > 0


def test_quintic_small_q_limit():
    t = mpf("0.01")
    chk = quintic_system_check(t, SYS_PREC)
    with working(SYS_PREC):
        assert abs(chk.info["u"] / (2 * t) - 1) < mpf("1e-3")
        assert abs(chk.info["v"] / (2 * t ** 4) - 1) < mpf("1e-3")
        assert abs(chk.info["p"] / (4 * t ** 5) - 1) < mpf("1e-3")


def test_quintic_ordering_on_twenty_points():
    for i in range(1, 21):
        q = Fraction(9 * i, 10 * 21)
        with working(SYS_PREC):
            t = mpmath.root(mpf(q.numerator) / q.denominator, 5)
        chk = quintic_system_check(t, SYS_PREC)
        alpha, beta = chk.info["roots"].roots
        with working(SYS_PREC):
            assert chk.info["u"] > chk.info["v"]
            assert alpha >= beta
            # u^5/p is the larger root
            assert abs(chk.info["u"] ** 5 / chk.info["p"] - alpha) <= alpha * mpf(10) ** -50


@given(st.fractions(min_value=-100, max_value=100, max_denominator=10 ** 6))
def test_quintic_discriminant_is_a_perfect_square_times_positive(p):
    # ((p-1)^2 + 7)^2 - 4p^3 = (p - 4)^2 (p^2 + 4), so alpha and beta are always real
    assert ((p - 1) ** 2 + 7) ** 2 - 4 * p ** 3 == (p - 4) ** 2 * (p ** 2 + 4)


def test_quintic_roots_sum_and_product():
    with working(100):
        for p in (mpf(2), mpf(4), mpf("0.37")):
            alpha, beta = quintic_roots(p).roots
            assert alpha >= beta > 0
            assert abs(alpha * beta - p ** 3) < mpf(10) ** -25
            assert abs(alpha + beta - ((p - 1) ** 2 + 7)) < mpf(10) ** -25


def test_septic_system_at_point():
    chk = septic_system_check(0.35, SYS_PREC)
    assert chk.ok(mpf(10) ** -50), chk.residuals
    perm = chk.info["permutation"]
    assert sorted(perm) == [0, 1, 2]


def test_septic_small_q_limit():
    t = mpf("0.05")
    chk = septic_system_check(t, SYS_PREC)
    with working(SYS_PREC):
        assert abs(chk.info["u"] / (2 * t) - 1) < mpf("1e-2")
        assert abs(chk.info["p"] / (8 * t ** 14) - 1) < mpf("1e-2")


def test_system_domain():
    with pytest.raises(DomainError):
        cubic_system_check(1.5, 100)
    with pytest.raises(DomainError):
        septic_system_check(0, 100)
