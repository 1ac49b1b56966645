import json
from fractions import Fraction

import pytest

from qmock import dsl, registry
from qmock.algebra import Monomial, Series, series_equal_up_to
from qmock.errors import UnknownIdentity, UnknownTheorem

CAT = registry.catalog()


def test_catalog_size_and_unique_ids():
    ids = [e.id for e in CAT.identities]
    assert len(ids) >= 120
    assert len(set(ids)) == len(ids)


def test_catalog_is_ordered_by_section():
    sections = [e.section for e in CAT.identities]
    assert sections == sorted(sections)


def test_every_entry_parses_and_has_a_known_default_order():
    for e in CAT.identities:
        e.lhs_expr, e.rhs_expr
        assert e.default_order == registry.default_order_for(e.D), e.id


def test_every_theorem_parses():
    for t in CAT.theorems:
        dsl.parse(t.lhs), dsl.parse(t.rhs)


def test_specialization_targets_exist():
    for s in CAT.specializations:
        assert s.target in CAT, s.label
        CAT.theorem(s.theorem)


def test_list_by_order8_tag():
    ids = {e.id for e in registry.list_identities(["order8"])}
    assert {"mock-8-%d" % k for k in range(1, 7)} <= ids
    assert {"mock-8-7-b", "mock-8-8-b", "mock-8-8-c"} <= ids


def test_list_without_filter_is_everything():
    assert registry.list_identities() == CAT.identities
    assert registry.list_identities([]) == CAT.identities


def test_list_unknown_tag_is_empty():
    assert registry.list_identities(["no-such-tag"]) == []


def test_list_requires_all_tags():
    both = registry.list_identities(["order8", "appell"])
    assert both and all({"order8", "appell"} <= e.tags for e in both)


@pytest.mark.parametrize("ident, order", [("Liu-eq-simplify", 60), ("W-Y-eq", 40)])
def test_verify_examples(ident, order):
    rep = registry.verify(ident, order)
    assert rep.ok and rep.order == order and rep.first_mismatch is None


def test_perturbed_rhs_fails_at_the_perturbation():
    e = CAT.get("Liu-eq-simplify")
    rep = registry.verify_identity(e.with_rhs("(%s) + q^5" % e.rhs), 40)
    assert rep.status == "fail"
    assert rep.first_mismatch.exponent == 5
    assert rep.first_mismatch.rhs - rep.first_mismatch.lhs == 1


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        registry.verify("nosuch")


def test_unknown_theorem():
    with pytest.raises(UnknownTheorem):
        registry.specialize("thm-nosuch", 0, 0)


def test_negative_order_rejected():
    with pytest.raises(ValueError):
        registry.verify("W-Y-eq", -1)


def test_specialize_curious_identity():
    inst = registry.specialize("thm-ab-2-3", 0, Monomial.q(0, -1))
    assert registry.verify_identity(inst, 40).ok
    spec = next(s for s in CAT.specializations if s.target == "2-3-cor-3-unusual")
    assert registry.verify_specialization(spec, 40).ok
    rhs = dsl.evaluate(CAT.get("2-3-cor-3-unusual").rhs, 40)
    assert series_equal_up_to(rhs, Series.const(2), 40) is None


def test_specialize_accepts_text_and_numbers():
    a = registry.specialize("thm-ab-2-3", 0, 0)
    b = registry.specialize("thm-ab-2-3", "0", Fraction(0))
    assert (a.lhs, a.rhs) == (b.lhs, b.rhs)
    assert registry.verify_identity(a, 40).ok


def test_specialize_fifth_order_at_zero():
    inst = registry.specialize("thm-ab-5-8", 0, 0)
    assert registry.verify_identity(inst, 50).ok


def test_specialize_records_fractional_denominator():
    inst = registry.specialize("thm-ab-2-3", Monomial.q(Fraction(1, 2)), 0)
    assert inst.D == 2 and inst.default_order == 60


def test_tiny_order_on_a_fine_grid_entry():
    e = next(e for e in CAT.identities if e.D >= 8)
    assert registry.verify(e.id, 4).ok


def test_parallel_matches_serial():
    ids = ["W-Y-eq", "Liu-eq-simplify", "mock-8-1", "T1-A", "h-m", "ADH-id-barf"]
    serial = registry.verify_all(20, ids=ids)
    parallel = registry.verify_all(20, parallel=True, ids=ids, workers=2)
    assert [r.line() for r in serial] == [r.line() for r in parallel]
    assert [r.id for r in serial] == ids


def test_catalog_override(tmp_path, monkeypatch):
    data = {"identities": [
        {"id": "b", "lhs": "1/(1-q)", "rhs": "sum(n, 0, inf, q^n)", "section": 2},
        {"id": "a", "lhs": "q", "rhs": "q^2", "section": 1, "tags": ["toy"]},
    ]}
    path = tmp_path / "toy.json"
    path.write_text(json.dumps(data))
    monkeypatch.setenv(registry.CATALOG_ENV, str(path))
    cat = registry.catalog()
    assert [e.id for e in cat.identities] == ["a", "b"]
    assert [e.id for e in registry.list_identities(["toy"])] == ["a"]
    reports = registry.verify_all(10)
    assert [r.status for r in reports] == ["fail", "pass"]
    assert reports[0].first_mismatch.exponent == 1


def test_duplicate_ids_rejected(tmp_path):
    path = tmp_path / "dup.json"
    path.write_text(json.dumps({"identities": [{"id": "x", "lhs": "1", "rhs": "1"}] * 2}))
    with pytest.raises(ValueError):
        registry.load_catalog(str(path))


def test_evaluation_errors_become_error_reports(tmp_path):
    path = tmp_path / "pole.json"
    path.write_text(json.dumps({"identities": [{"id": "pole", "lhs": "m(q^(1/2), q, q)", "rhs": "0", "D": 2}]}))
    rep = registry.verify_all(10, cat=registry.load_catalog(str(path)))[0]
    assert rep.status == "error" and "PoleError" in rep.message
