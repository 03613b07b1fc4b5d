from fractions import Fraction

import pytest

import edsverify.cases as C
from edsverify.algebra import LocFrac, Poly
from edsverify.equations import (
    CASE2_FINAL,
    CASE3_FINAL,
    CASE3_REWRITTEN,
    ELS_I,
    ELS_II,
    FSQ_I,
    FSQ_II,
    LTS_1,
    LTS_2,
    SUC,
    lam,
    sig,
)


@pytest.fixture(scope="module")
def const_lambda(system):
    return C.run_const_lambda(system)


@pytest.fixture(scope="module")
def case_ii(system):
    return C.run_case_ii(system)


@pytest.fixture(scope="module")
def case_iii(system):
    return C.run_case_iii(system)


def test_const_lambda_pipeline(const_lambda):
    assert const_lambda.ok
    tags = [s.tag for s in const_lambda.steps]
    for name in ("F1=0", "F2=0", "G3=0", "G4=0"):
        assert name in tags
    assert const_lambda.final["forced"] == "sig = 0"


def test_case_ii_pipeline(case_ii):
    assert case_ii.ok, [s for s in case_ii.steps if not s.ok]
    tags = [s.tag for s in case_ii.steps]
    assert tags[:4] == ["suc-1", "suc-2", "suc-3", "suc-4"]
    assert "lts-1" in tags and "els-i" in tags and "final" in tags


def test_case_ii_displays():
    P = Poly.var
    assert SUC[3] == 2 * sig * P("S2") - P("sig1")
    assert LTS_1 == P("lam3") * P("sig3") + 4 * sig * (4 * sig**2 - lam**2)
    assert LTS_2 == 3 * (4 * sig**2 - lam**2) * P("lam3") ** 2 - 64 * lam * sig**2 * (
        lam**2 - 2 * sig**2
    )
    assert CASE2_FINAL == lam**4 - 5 * lam**2 * sig**2 + 12 * sig**4


def test_case_ii_quartic_certificate(case_ii):
    assert case_ii.final["sos_ok"]
    assert case_ii.final["sos_certificate"] == "1*(lam^2 - 5/2*sig^2)^2 + 23/4*(sig^2)^2"


def test_case_iii_pipeline(case_iii):
    assert case_iii.ok, [s for s in case_iii.steps if not s.ok]
    tags = [s.tag for s in case_iii.steps]
    for name in ("fsq-i-a", "fsq-ii-b", "rule-1", "rule-3", "rewrite-h4", "final"):
        assert name in tags


def test_case_iii_displays():
    P = Poly.var
    assert FSQ_I == 8 * lam * sig * P("sigp") - 12 * sig**2 + lam**2
    assert FSQ_II == 64 * lam**2 * sig**3 * P("sigpp") - (4 * sig**2 - lam**2) * (
        12 * sig**2 + lam**2
    )
    assert CASE3_FINAL == 8 * lam**2 * sig * (P("lam1") ** 2 + P("lam2") ** 2 + P("lam3") ** 2)


def test_case_iii_rewritten_h4_sign():
    """The last rewritten equation carries +16 lam^3 sig^2 on its right-hand
    side, i.e. -16 in the lhs-minus-rhs polynomial."""
    mono = tuple(sorted((("lam", 3), ("sig", 2))))
    assert CASE3_REWRITTEN[5].terms[mono] == Fraction(-16)


def test_els_displays_are_solutions_of_the_divided_equations():
    P = Poly.var
    assert ELS_I.coefficient_of("lam33", 1) == 8 * lam * sig * (2 * sig - lam)
    assert ELS_II.coefficient_of("lam33", 1) == 8 * lam * sig * (2 * sig + lam)


def test_sos_quartic():
    cert = C.sos_certificate(CASE2_FINAL)
    assert cert is not None
    acc = Poly.zero()
    for c, q in cert:
        assert c > 0
        acc = acc + Poly.const(c) * q * q
    assert acc == CASE2_FINAL
    assert cert[0][0] == 1 and cert[1][0] == Fraction(23, 4)


def test_sos_trivial_two_square():
    cert = C.sos_certificate(lam**2 + sig**2)
    assert cert == [(Fraction(1), lam), (Fraction(1), sig)]


def test_sos_three_variable_trivial():
    p = Poly.var("lam1") ** 2 + Poly.var("lam2") ** 2 + Poly.var("lam3") ** 2
    cert = C.sos_certificate(p)
    assert cert is not None and len(cert) == 3


def test_sos_inconclusive_cases():
    assert C.sos_certificate(-(lam**2)) is None
    # indefinite quartic: lam^4 - 10 lam^2 sig^2 + sig^4 is negative at lam=sig
    assert C.sos_certificate(lam**4 - 10 * lam**2 * sig**2 + sig**4) is None


def test_reduce_square_helper():
    value = LocFrac(2 * lam)
    expr = LocFrac(Poly.var("lam3") ** 4 * sig)
    reduced = C.reduce_square(expr, "lam3", value)
    assert reduced == LocFrac(4 * lam**2 * sig)


def test_reports_serialize(const_lambda, case_ii, case_iii):
    for report in (const_lambda, case_ii, case_iii):
        data = report.as_dict()
        assert data["ok"] is True
        assert data["steps"]
        assert isinstance(data["assumptions"], list)


def test_failed_step_reports_residual():
    report = C.PipelineReport("demo", assumptions=[])
    ok = C._check(report, "mismatch", "deliberately wrong expectation",
                  C._frac(Poly.var("lam")), 0)
    assert not ok
    assert not report.ok
    assert "residual" in report.steps[0].detail
    assert "lam" in report.steps[0].detail
