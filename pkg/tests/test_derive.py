from fractions import Fraction

import pytest

import edsverify.derive as D
from edsverify.algebra import LocFrac, Poly
from edsverify.equations import EQ36, NEL, SOL, VARIANTS, lam, sig, mup, mum


@pytest.fixture(scope="module")
def nel(system):
    return D.derive_nel(system)


@pytest.fixture(scope="module")
def solution(system, nel):
    nel_set, _ = nel
    return D.solve_sol(nel_set)


@pytest.fixture(scope="module")
def derived36(system):
    return D.derive_36(system)


def test_nel_row_count(nel):
    nel_set, report = nel
    assert len(nel_set.equations) == 12
    assert all(entry["matched"] for entry in report.values())


def test_nel_specific_rows():
    P = Poly.var
    assert NEL["i"] == 2 * sig * P("L1") + mup * P("G3") + P("sig2")
    assert NEL["v"] == mup * P("F1") + mum * P("G2")


def test_sol_closed_forms(solution):
    for name, value in SOL.items():
        assert (solution[name] - value).is_zero()


def test_sol_specific_components(solution):
    P = Poly.var
    assert solution["F1"] == LocFrac(-mum * P("lam3") * Fraction(1, 8), {"lam": 1, "sig": 1})
    assert solution["G1"] == LocFrac(-mup * P("lam4") * Fraction(1, 8), {"lam": 1, "sig": 1})


def test_inp_identities(solution):
    assert D.verify_inp(solution) == [True, True]


def test_back_substitution_zero(system, nel, solution):
    nel_set, _ = nel
    for eq in nel_set.equations.values():
        assert system.ctx.substitute(eq.poly, solution).is_zero()


def test_all_36_matched(derived36):
    eqset, report = derived36
    assert len(eqset.equations) == 36
    assert all(entry["matched"] for entry in report.values())
    assert all(entry["residual"] == "0" for entry in report.values())


def test_equation_sources(derived36):
    _, report = derived36
    assert report["a"]["source"] == "d2lam @ AB"
    assert report["f"]["source"] == "d2sig @ AB"
    assert report["c"]["source"] == "dF @ AB"
    assert report["h"]["source"] == "dL @ AB"
    assert report["j"]["source"] == "dS @ AB"
    assert "via replacement 2" in report["d2"]["source"]


def test_multipliers_recovered(derived36):
    eqset, _ = derived36
    table = D.verify_multipliers(eqset)
    assert all(entry["ok"] for entry in table.values())
    assert table["c"]["recovered"] == "256*lam^2*sig^3"
    assert table["j"]["recovered"] == "32*lam*sig^2"
    assert table["h"]["recovered"] in ("512*lam^2*sig^4", "-512*lam^2*sig^4")


def test_dG_cross_checks(derived36):
    _, report = derived36
    for label in D.SYMMETRY_GENERATED:
        assert report[label]["dG_cross_check"]


def test_symmetry_variants(system, derived36):
    eqset, _ = derived36
    table = D.verify_symmetry_variants(system, eqset)
    assert all(entry["ok"] for entry in table.values())
    assert table["h4"]["base"] == "h" and table["h4"]["case"] == 4
    assert table["e2"]["base"] == "e" and table["e2"]["case"] == 2


def test_variant_table_is_complete():
    assert len(VARIANTS) == 25
    assert set(VARIANTS) | set("abcdefghijk") == set(EQ36)


def test_group_order_and_relations():
    elements, report = D.symmetry_group()
    assert report["order"] == 32
    assert report["cng_conjugation"]
    assert report["cng_composition"]
    assert report["v_is_i_then_iv"]


def test_group_closure_on_equations(system):
    report = D.verify_group_closure(system)
    assert report["closure_ok"], report["failures"]


def test_form_action_matches_displayed_table(system):
    # (B,-A,C,D; E,-G,F,H,L,S), (A,B,D,-C; E,G,-F,H,L,S),
    # (C,D,A,B; H,-F,G,E,-L,S)
    from edsverify.forms import DForm

    def one(name, sign=1):
        return DForm(system.basis, 1, {(system.basis.index[name],): sign})

    act1 = D.form_action(D.RPL_CASES[1], system)
    assert act1["A"] == one("B") and act1["B"] == one("A", -1)
    assert act1["F"] == one("G", -1) and act1["G"] == one("F")
    assert act1["L"] == one("L") and act1["S"] == one("S")
    act2 = D.form_action(D.RPL_CASES[2], system)
    assert act2["C"] == one("D") and act2["D"] == one("C", -1)
    assert act2["F"] == one("G") and act2["G"] == one("F", -1)
    act4 = D.form_action(D.RPL_CASES[4], system)
    assert act4["A"] == one("C") and act4["F"] == one("F", -1)
    assert act4["L"] == one("L", -1) and act4["S"] == one("S")
    assert act4["E"] == system.form_H() and act4["H"] == system.form_E()


def test_system_invariance_under_group(system):
    report = D.verify_system_invariance(system)
    assert report["ok"], report["failures"]
    assert report["elements"] == 32


def test_dependence_relations():
    table = D.verify_dependence_relations()
    for name in ("e3", "e1", "i1", "i3", "intro_a", "intro_b"):
        assert table[name]["ok"], table[name]


def test_check_combination_example():
    ok, residual = D.check_combination(
        EQ36["e3"],
        ["a", "a4", "e"],
        [8 * lam * sig * mup, -8 * lam * sig * mum, Poly.const(1)],
    )
    assert ok and residual.is_zero()


def test_check_combination_reports_residual():
    ok, residual = D.check_combination(EQ36["e3"], ["a"], [Poly.const(1)])
    assert not ok
    assert not residual.is_zero()


def test_printed_d2_variant_fails_membership(system):
    """Regression: the as-printed lam4 sig4 sign in the d2 display is not a
    consequence of the system; the corrected transcription is."""
    printed = EQ36["d2"] - 64 * lam**2 * sig * Poly.var("lam4") * Poly.var("sig4")
    forms = D.identity_forms(system, which=("dG",))
    from edsverify.forms import coeff6

    raw = dict(zip(D.IDENTITY_SLOTS["dG"], coeff6(forms["dG"])))["d2"]
    assert D.match_transcription(EQ36["d2"], raw) is not None
    assert D.match_transcription(printed, raw) is None


def test_integrability_criterion(system):
    report = D.integrability_criterion(system)
    assert report["ok"]
    assert report["span12_coefficients"] == ["(-lam4)/(lam)", "(lam3)/(lam)"]
    assert report["span34_coefficients"] == ["(-lam2)/(lam)", "(lam1)/(lam)"]


def test_rotation_invariance():
    report = D.rotation_invariance()
    assert report["ok"]
    assert report["rotated_1313_equals_factor_sigma"]
    assert report["identity_rotation_fixes_sigma"]
    assert not report["failures"]


def test_rank_probe_reports(system):
    probe = D.rank_probe(seed=1, trials=2)
    for trial in probe["trials"]:
        assert trial["rows"] == 32 and trial["unknowns"] == 32
        assert 0 <= trial["rank"] <= 32


def test_every_equation_symbol_is_registered(system):
    from edsverify.equations import INTRO_A, INTRO_B

    names = set()
    for poly in (*EQ36.values(), *NEL.values(), INTRO_A, INTRO_B):
        names |= poly.variables()
    assert names <= system.ctx.symbols


def test_equations_affine_linear_in_second_order_jets():
    from edsverify.equations import SECOND_ORDER

    second = set(SECOND_ORDER)
    for label, poly in EQ36.items():
        for mono in poly.terms:
            weight = sum(e for n, e in mono if n in second)
            assert weight <= 1, (label, mono)


def test_equation_set_labels_unique(derived36):
    eqset, _ = derived36
    assert len(set(eqset.labels())) == 36
    assert eqset.second_order_symbols and len(eqset.second_order_symbols) == 48


def test_tampered_system_is_caught(system):
    """Mutation check: flipping one sign in the dF rule must break matching."""
    from edsverify.forms import DForm, wedge
    from edsverify.structure import StructureSystem

    A, C = system.one_form("A"), system.one_form("C")
    sig = system.ctx.symbol("sig")
    rules = dict(system.d_rules)
    rules["F"] = rules["F"] - wedge(A, C).scale(2 * sig)  # sigma A^C -> -sigma A^C
    broken = StructureSystem(system.basis, system.ctx, rules, system.nonzero)
    with pytest.raises(D.DeriveError):
        D.derive_nel(broken)
