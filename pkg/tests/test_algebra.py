from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homleibniz.algebra import (
    CrossedModule,
    HomAction,
    HomLeibnizAlgebra,
    Morphism,
    abelianization,
    alpha_center,
    center,
    derived_ideal,
    direct_sum,
    higgins_commutator,
    ideal_crossed_module,
    induced_action,
    is_ideal,
    is_perfect,
    make_ideal,
    quotient_algebra,
    restrict,
    semidirect_product,
    validate_action,
    validate_algebra,
    validate_crossed_module,
    whole,
)
from homleibniz.catalog import (
    abelian,
    example_5_2_i,
    example_5_2_iii,
    heisenberg,
    mutants,
    scaling_action,
    sl2,
)
from homleibniz.errors import ValidationError
from homleibniz.exactla import Mat, Subspace


def span(n, *vecs):
    return Subspace.from_vectors(n, [list(v) for v in vecs])


E3 = span(3, (0, 0, 1))


def test_brackets_of_named_algebras():
    g = example_5_2_iii()
    assert g.bracket((1, 0, 0), (0, 1, 0)) == (0, 0, 1)
    assert abelian(3).bracket((1, 2, 3), (3, 2, 1)) == (0, 0, 0)
    assert heisenberg(1).bracket((0, 1, 0), (1, 0, 0)) == (0, 0, -1)


def test_catalog_and_zero_alpha_abelian_are_valid():
    assert validate_algebra(example_5_2_iii()) == []
    for a in ("id", "zero", "shift", [[1, 2, 0], [0, 1, 0], [3, 0, 0]]):
        assert validate_algebra(abelian(3, a)) == []


def test_multiplicativity_mutation_is_pinpointed():
    # changing alpha(e2) to e1 does not break anything: alpha[e1,e2] = 0 = [e3, e1]
    g = example_5_2_iii()
    cols = [{2: F(1)}, {0: F(1)}, {}]
    probe = HomLeibnizAlgebra(3, g.products, Mat.from_sparse_columns(cols, 3))
    assert validate_algebra(probe) == []
    for _id, alg, axiom, idx in mutants():
        viol = validate_algebra(alg)
        assert viol, _id
        assert (viol[0].axiom, viol[0].indices) == (axiom, idx)
        assert any(viol[0].residual)


def test_centers_of_example():
    g = example_5_2_iii()
    assert center(g) == E3
    assert center(g, "left") == span(3, (0, 1, 0), (0, 0, 1))
    assert center(abelian(2)) == Subspace.full(2) == center(abelian(2), "left")
    assert alpha_center(g) == E3
    k = example_5_2_i(1)
    assert alpha_center(k) == span(2, (0, 1))


def test_alpha_center_equals_center_for_surjective_alpha(catalog_algebras):
    for ref, g in catalog_algebras:
        z = alpha_center(g)
        assert is_ideal(g, z), ref
        for j in range(g.dim):
            for v in z.vectors():
                e = [0] * g.dim
                e[j] = 1
                assert not any(g.bracket(v, e)) and not any(g.bracket(e, v)), ref
        if g.is_regular():
            assert z == center(g), ref


def test_derived_ideal_and_perfect():
    assert derived_ideal(example_5_2_iii()) == E3
    assert derived_ideal(abelian(2)).dim == 0
    assert is_perfect(sl2())
    assert not is_perfect(abelian(1))
    assert not is_perfect(example_5_2_iii())


def test_higgins_commutator_is_closed():
    g = sl2()
    h = higgins_commutator(g, whole(g), whole(g))
    assert h.space == Subspace.full(3)
    g = example_5_2_iii()
    assert higgins_commutator(g, E3, whole(g)).space.dim == 0


def test_abelianization():
    ab, pi = abelianization(example_5_2_iii())
    assert ab.dim == 2 and ab.is_abelian()
    assert ab.alpha == Mat.from_rows([[0, 0], [0, 1]])
    assert pi.validate() == []
    assert abelianization(heisenberg(1))[0].dim == 2
    assert abelianization(abelian(2))[0].same_structure(abelian(2))


def test_quotients():
    g = example_5_2_iii()
    same, _ = quotient_algebra(g, Subspace.zero(3))
    assert same.same_structure(g)
    assert quotient_algebra(g, Subspace.full(3))[0].dim == 0
    q, pi = quotient_algebra(g, E3)
    assert q.dim == 2 and q.is_abelian()
    assert q.alpha == Mat.from_rows([[0, 0], [0, 1]])
    with pytest.raises(ValidationError):
        quotient_algebra(g, span(3, (1, 0, 0)))


def test_direct_sums():
    assert direct_sum(abelian(1), abelian(1)).same_structure(abelian(2))
    s = direct_sum(example_5_2_iii(), abelian(1))
    assert s.dim == 4 and center(s) == span(4, (0, 0, 1, 0), (0, 0, 0, 1))
    h = direct_sum(heisenberg(1), heisenberg(1))
    assert h.dim == 6 and derived_ideal(h).dim == 2


def test_actions():
    assert validate_action(HomAction.trivial(abelian(1), heisenberg(1))) == []
    for g in (example_5_2_iii(), heisenberg(2), sl2(), example_5_2_i(2)):
        assert validate_action(HomAction.by_bracket(g)) == []


def test_zeroed_action_arrays():
    # a two-step nilpotent algebra still acts on itself with one array zeroed
    g = example_5_2_iii()
    assert validate_action(HomAction(g, g, {}, g.products)) == []
    s = sl2()
    left = validate_action(HomAction(s, s, {}, s.products))
    assert (left[0].axiom, left[0].indices) == ("A6", (0, 0, 1))
    right = validate_action(HomAction(s, s, s.products, {}))
    assert (right[0].axiom, right[0].indices) == ("A1", (0, 1, 0))


def test_printed_first_axiom_fails_on_sl2_self_action():
    a = HomAction.by_bracket(sl2())
    assert validate_action(a) == []
    literal = validate_action(a, a1="literal")
    assert len(literal) == 12 and {v.axiom for v in literal} == {"A1"}


def test_semidirect_products():
    k, i_m, i_g, proj = semidirect_product(scaling_action())
    assert validate_algebra(k) == []
    assert k.bracket((1, 0), (0, 1)) == (-1, 0)
    assert k.bracket((0, 1), (1, 0)) == (1, 0)
    for f in (i_m, i_g, proj):
        assert f.validate() == []
    triv, *_ = semidirect_product(HomAction.trivial(abelian(1), heisenberg(1)))
    assert triv.dim == 4 and triv.same_structure(direct_sum(heisenberg(1), abelian(1)))


def test_example_is_not_split_over_e3():
    # every complement of span{e3} brackets to e3, so none is a subalgebra
    g = example_5_2_iii()
    for a in range(-2, 3):
        for b in range(-2, 3):
            u, v = (1, 0, a), (0, 1, b)
            c = span(3, u, v)
            assert not c.contains(g.bracket(u, v))


def test_induced_action_reconstructs_split_algebra():
    # K = M x| G rebuilt from the ideal M and the section of G
    k, i_m, i_g, _ = semidirect_product(scaling_action())
    act = induced_action(k, span(2, (1, 0)), i_g)
    assert validate_action(act) == []
    rebuilt, *_ = semidirect_product(act, twisted=False)
    assert rebuilt.same_structure(k)


def test_crossed_modules():
    g = example_5_2_iii()
    assert validate_crossed_module(ideal_crossed_module(g, E3)) == []
    full = ideal_crossed_module(g, Subspace.full(3))
    assert validate_crossed_module(full) == []
    broken = CrossedModule(full.mu, HomAction(full.action.actor, full.action.actee, {}, full.action.right))
    viol = validate_crossed_module(broken)
    assert [(v.axiom, v.indices) for v in viol] == [("equivariance-left", (0, 1)), ("peiffer-left", (0, 1))]


def test_restrict_and_ideal_checks():
    g = heisenberg(2)
    sub, inc = restrict(g, center(g))
    assert sub.dim == 1 and inc.validate() == []
    make_ideal(g, center(g))
    with pytest.raises(ValidationError):
        make_ideal(example_5_2_iii(), span(3, (0, 1, 0)))


def test_morphism_validation_flags_bad_maps():
    g = example_5_2_iii()
    assert Morphism.identity(g).validate() == []
    bad = Morphism(g, g, Mat.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 0]]))
    assert [v.axiom for v in bad.validate()][:1] == ["bracket"]


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=9, max_size=9))
def test_validity_is_basis_independent(entries):
    p = Mat.from_rows([entries[0:3], entries[3:6], entries[6:9]])
    if p.rank() < 3:
        return
    for g in (example_5_2_iii(), heisenberg(1)):
        h = g.change_basis(p)
        assert validate_algebra(h) == []
        assert center(h).dim == center(g).dim
        assert alpha_center(h).dim == alpha_center(g).dim
        assert derived_ideal(h).dim == derived_ideal(g).dim
