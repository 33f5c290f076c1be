import pytest

from homleibniz.algebra import alpha_center, direct_sum, is_perfect
from homleibniz.capability import (
    capability_consistency_suite,
    center_report,
    exterior_center,
    is_capable,
    smallest_center_characterization_check,
    tensor_center,
)
from homleibniz.catalog import (
    abelian,
    example_5_2_i,
    example_5_2_ii,
    example_5_2_iii,
    heisenberg,
    sl2,
)
from homleibniz.errors import ValidationError
from homleibniz.exactla import Subspace

Z_H2 = Subspace.from_vectors(5, [[0, 0, 0, 0, 1]])


def test_tensor_center_examples():
    for a in ("id", "zero", "shift"):
        assert tensor_center(abelian(2, a)).dim == 0
    assert tensor_center(sl2()) == exterior_center(sl2())
    assert tensor_center(heisenberg(2)) == Z_H2


def test_exterior_center_examples():
    assert exterior_center(example_5_2_iii()).dim == 0
    assert exterior_center(heisenberg(2)) == Z_H2
    assert exterior_center(abelian(3)).dim == 0


def test_verdicts():
    ok, rep = is_capable(example_5_2_iii())
    assert ok and rep.witnesses == []
    ok, rep = is_capable(heisenberg(2))
    assert not ok
    assert [list(w) for w in rep.witnesses] == [[0, 0, 0, 0, 1]]
    assert is_capable(sl2())[0]
    assert is_capable(heisenberg(1))[0]
    for k in (1, 2):
        assert is_capable(example_5_2_i(k))[0]
    for seed in (0, 1, 2, 3):
        assert is_capable(example_5_2_ii(seed=seed))[0]


def test_report_invariants(catalog_algebras):
    for ref, g in catalog_algebras:
        rep = center_report(g)
        assert rep.Z_star <= rep.Z_wedge <= rep.Z, ref
        assert rep.capable == (rep.Z_wedge.dim == 0)
        if is_perfect(g):
            assert rep.Z_star == rep.Z_wedge, ref


def test_suite_items_for_named_algebras():
    items = capability_consistency_suite(example_5_2_iii())["items"]
    assert items["c_nonperfect_nonsurjective"]["status"] == "pass"
    items = capability_consistency_suite(sl2())["items"]
    assert items["a_perfect_surjective"]["status"] == "pass"
    assert items["b_perfect"]["status"] == "pass"
    items = capability_consistency_suite(sl2("zero"))["items"]
    assert items["a_perfect_surjective"]["status"] == "n/a"
    assert items["b_perfect"]["status"] == "pass"


def test_suite_over_catalog(catalog_algebras):
    for ref, g in catalog_algebras:
        rep = capability_consistency_suite(g)
        assert rep["failures"] == [], ref


def test_direct_sum_items():
    h = heisenberg(2)
    s = direct_sum(h, h)
    rep = capability_consistency_suite(s, summands=(h, h), cap=10)
    assert not rep["capable"]
    e = rep["items"]["e_direct_sum_inclusion"]
    assert e["status"] == "pass" and e["summand_capable"] == [False, False]
    assert rep["items"]["e_regular_converse"]["status"] == "n/a"
    g1, g2 = heisenberg(1), sl2()
    rep = capability_consistency_suite(direct_sum(g1, g2), summands=(g1, g2))
    assert rep["ok"] and rep["items"]["e_regular_converse"]["status"] == "pass"
    # a null line makes the sum capable though H(2) is not
    n = abelian(1, "zero")
    rep = capability_consistency_suite(direct_sum(h, n), summands=(h, n))
    assert rep["capable"] and rep["ok"]
    with pytest.raises(ValueError):
        capability_consistency_suite(s, summands=(h, n), cap=10)


def test_smallest_center_characterization():
    g = example_5_2_iii()
    rep = smallest_center_characterization_check(g, Subspace.from_vectors(3, [[0, 0, 1]]))
    assert not rep["n_in_Z_wedge"] and not rep["dimension_identity"] and rep["ok"]
    rep = smallest_center_characterization_check(g, Subspace.zero(3))
    assert rep["n_in_Z_wedge"] and rep["dimension_identity"] and rep["ok"]
    rep = smallest_center_characterization_check(heisenberg(2), Z_H2)
    assert rep["n_in_Z_wedge"] and rep["dimension_identity"] and rep["induced_injective"]
    with pytest.raises(ValidationError):
        smallest_center_characterization_check(g, Subspace.from_vectors(3, [[0, 1, 0]]))


def test_smallest_center_over_catalog(catalog_algebras):
    for ref, g in catalog_algebras:
        if g.dim > 5:
            continue
        for n in (alpha_center(g), exterior_center(g)):
            assert smallest_center_characterization_check(g, n)["ok"], ref
