import pytest

from homleibniz import catalog
from homleibniz.algebra import HomAction, alpha_center, direct_sum, validate_algebra
from homleibniz.catalog import (
    abelian,
    build,
    build_ref,
    example_5_2_i,
    example_5_2_ii,
    example_5_2_iii,
    free_nilpotent,
    heisenberg,
    parse_ref,
    quotient_of,
    random_central_quotient,
    semidirect_of,
    sum_of,
)
from homleibniz.errors import CapExceeded
from homleibniz.exactla import Mat, Subspace
from homleibniz.products import exterior_product, self_pair
from homleibniz.homology import hl2_dim


def test_every_entry_is_valid_and_meets_expectations(catalog_algebras):
    assert len(catalog_algebras) >= 12
    for ref, g in catalog_algebras:
        assert validate_algebra(g) == [], ref
        assert g.name == ref


def test_named_builds():
    g = build("example_5_2_iii")
    assert g.dim == 3
    assert [g.alpha.column(i) for i in range(3)] == [(0, 0, 1), (0, 1, 0), (0, 0, 0)]
    z = build("abelian", {"n": 2, "alpha": "zero"})
    assert z.dim == 2 and z.is_abelian() and z.alpha.is_zero()
    k = example_5_2_i(1)
    assert k.basis_labels == ("e1", "e11")
    assert k.bracket((1, 0), (1, 0)) == (0, 1)
    assert alpha_center(k) == Subspace.from_vectors(2, [[0, 1]])


def test_heisenberg_is_antisymmetric():
    for n in (1, 2, 3):
        h = heisenberg(n)
        assert h.dim == 2 * n + 1 and h.is_antisymmetric()


def test_example_ii_cover():
    k = example_5_2_ii(seed=3)
    assert k.alpha.is_zero() and k.dim == 4
    assert alpha_center(k).dim == 1
    # the cover of a base without alpha-center is the base itself
    assert example_5_2_ii(seed=5).dim == 3


def test_free_nilpotent():
    g = free_nilpotent(1, "id", 2)
    assert g.dim == 2 and g.bracket((1, 0), (1, 0)) == (0, 1)
    assert g.bracket((0, 1), (1, 0)) == (0, 0)
    g = free_nilpotent(2, "id", 2)
    assert g.dim == 6
    g3 = free_nilpotent(2, "id", 3)
    # concatenation is associative, so every degree-three tensor is a generator instance
    assert g3.dim == 6
    assert hl2_dim(g3) == exterior_product(self_pair(g3)).lambda_kernel().dim
    assert validate_algebra(free_nilpotent(2, [[1, 1], [0, 1]], 2)) == []
    with pytest.raises(CapExceeded):
        free_nilpotent(3, "id", 10)


def test_combinators():
    assert sum_of(example_5_2_iii(), abelian(1)).dim == 4
    q = quotient_of(example_5_2_iii(), [[0, 0, 1]])
    assert q.dim == 2 and q.is_abelian() and q.alpha.column(0) == (0, 0)
    s = semidirect_of(HomAction.trivial(abelian(1), heisenberg(1)))
    assert s.dim == 4 and s.same_structure(direct_sum(heisenberg(1), abelian(1)))
    a = random_central_quotient(catalog.example_5_2_iii_cover(), 7)
    b = random_central_quotient(catalog.example_5_2_iii_cover(), 7)
    assert a.same_structure(b)


def test_refs_round_trip():
    for e in catalog.entries():
        name, params = parse_ref(e.ref)
        assert (name, params) == (e.id, e.params)
        assert build_ref(e.ref).same_structure(e.build())
    assert parse_ref("heisenberg(2)") == ("heisenberg", {"n": 2})
    for bad in ("nosuch(1)", "heisenberg(n=)", "heisenberg(q=1)", "heisenberg(n=len)"):
        with pytest.raises(ValueError):
            parse_ref(bad)


def test_alpha_specs():
    assert abelian(2, "shift").alpha == Mat.from_rows([[0, 0], [1, 0]])
    assert abelian(2, "diag:1,-1").alpha == Mat.from_rows([[1, 0], [0, -1]])
    assert abelian(1, "scalar:2/3").alpha.entries[0][0] == Mat.from_rows([[2]]).entries[0][0] / 3
    with pytest.raises(ValueError):
        abelian(2, "bogus")


def test_mutants_are_invalid():
    ids = [m[0] for m in catalog.mutants()]
    assert len(ids) == len(set(ids)) >= 4
    for _id, g, _axiom, _idx in catalog.mutants():
        assert validate_algebra(g)


def test_expected_invariants_are_enforced():
    from dataclasses import replace

    from homleibniz.errors import ValidationError

    e = next(e for e in catalog.entries() if e.id == "sl2" and not e.params)
    with pytest.raises(ValidationError, match="center_dim"):
        replace(e, expected={"center_dim": (1, "derived")}).build()
