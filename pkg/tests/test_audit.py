import pytest

from superkit.audit import AUDIT_ITEMS, paper_check
from superkit.grassmann import ConjugationPolicy
from superkit.laurent import restrict_to_circle
from superkit.reference_forms import reference_circle_unit, reference_hermitian

from conftest import I


@pytest.fixture(scope="module")
def fix_report():
    return paper_check(ConjugationPolicy.FIX)


def item(report, name):
    return next(i for i in report["items"] if i["item"] == name)


def test_every_item_reported(fix_report):
    assert [i["item"] for i in fix_report["items"]] == list(AUDIT_ITEMS)
    for i in fix_report["items"]:
        assert i["status"] in ("match", "mismatch")
        for layer in i["layers"].values():
            assert (layer["status"] == "match") == (not layer["diff"])


@pytest.mark.parametrize("name", ["superconformal_derivatives", "difference_unit", "displayed_densities"])
def test_identities_that_recompute_exactly(fix_report, name):
    assert item(fix_report, name)["status"] == "match"


@pytest.mark.parametrize("policy", list(ConjugationPolicy))
def test_unit_circle_form_differs_by_one_sign_from_its_predecessor(policy):
    (row,) = item(paper_check(policy, ["circle_unit"]), "circle_unit")["layers"]["derived"]["diff"]
    assert row["component"] == "e12"
    quoted = reference_circle_unit()
    derived = reference_hermitian(1, 1, I, I).map(restrict_to_circle)
    assert quoted.c0 == derived.c0 and quoted.c12 == -derived.c12


def test_unit_circle_form_agrees_with_pushforward_under_fix(fix_report):
    assert item(fix_report, "circle_unit")["layers"]["first_principles"]["status"] == "match"


def test_general_circle_form_exponent(fix_report):
    rows = item(fix_report, "circle_general")["layers"]["derived"]["diff"]
    row = next(r for r in rows if r["at"].startswith("Pi(0,-2)"))
    assert row["quoted"] == "(-2)*e^(-3i phi)"
    assert row["computed"] == "(2)*e^(-1i phi)"


def test_quoted_parts_reproduce_quoted_pi20_variation(fix_report):
    assert item(fix_report, "pi20_variation")["layers"]["derived"]["status"] == "match"


def test_index_discrepancy_reported(fix_report):
    rows = item(fix_report, "must_vanish_index")["layers"]["first_principles"]["diff"]
    assert {r["type"]: r["computed"] for r in rows} == {"Re/Re": ["psi2"], "Im/Re": ["psi2"]}


def test_variation_list_typo_located(fix_report):
    rows = item(fix_report, "variation_list")["layers"]["derived"]["diff"]
    assert {r["variation"] for r in rows} == {"delta conj(psi1)", "delta conj(psi2)"}
    assert all(r["at"] == "m_top" for r in rows)


def test_deterministic():
    assert paper_check("fix") == paper_check("fix")
