"""Tensor and exterior centers, capability, and the consistency suite.

An algebra is capable exactly when its exterior center vanishes, so
:func:`is_capable` only needs the exterior square.  The suite in
:func:`capability_consistency_suite` compares that verdict with every
sufficient or equivalent criterion whose hypotheses the algebra meets.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    HomLeibnizAlgebra,
    alpha_center,
    center,
    derived_ideal,
    is_alpha_invariant,
    is_perfect,
    quotient_algebra,
    _as_space,
)
from .errors import ValidationError
from .homology import hl2_dim, induced_map_on_homology
from .exactla import ONE, Mat, Subspace, format_scalar, kernel_basis, vstack
from .products import (
    ProductPresentation,
    exterior_product,
    self_pair,
    tensor_product,
)


def _annihilator_condition(q: ProductPresentation) -> Subspace:
    """All y in g with y * e_j and e_j * y zero in both generator blocks, for every j."""
    g = q.pair.base
    d = g.dim
    t = q._tables
    blocks = []
    for j in range(d):
        ej = {j: ONE}
        for make in (
            lambda y: t.mn(y, ej),
            lambda y: t.mn(ej, y),
            lambda y: t.nm(y, ej),
            lambda y: t.nm(ej, y),
        ):
            cols = [q.project(make({i: ONE})) for i in range(d)]
            blocks.append(Mat.from_sparse_columns(cols, q.dim))
    if not blocks or q.dim == 0:
        return Subspace.full(d)
    return kernel_basis(vstack(*blocks))


def _stable_preimage_chain(g: HomLeibnizAlgebra, base: Subspace) -> Subspace:
    """``{x : alpha^k x in base for all k >= 0}``."""
    w = base
    for _ in range(g.dim + 1):
        nxt = base & w.preimage(g.alpha)
        if nxt == w:
            return w
        w = nxt
    return w


def tensor_center(g: HomLeibnizAlgebra, cap: int | None = None, q: ProductPresentation | None = None) -> Subspace:
    q = q or tensor_product(self_pair(g), cap)
    return _stable_preimage_chain(g, _annihilator_condition(q))


def exterior_center(g: HomLeibnizAlgebra, cap: int | None = None, q: ProductPresentation | None = None) -> Subspace:
    q = q or exterior_product(self_pair(g), cap)
    return _stable_preimage_chain(g, _annihilator_condition(q))


@dataclass
class CenterReport:
    algebra: HomLeibnizAlgebra
    Z: Subspace
    Z_alpha: Subspace
    Z_star: Subspace
    Z_wedge: Subspace
    capable: bool
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        def sub(s: Subspace):
            return {"dim": s.dim, "basis": [[format_scalar(x) for x in r] for r in s.basis.entries]}

        return {
            "Z": sub(self.Z), "Z_alpha": sub(self.Z_alpha), "Z_star": sub(self.Z_star),
            "Z_wedge": sub(self.Z_wedge), "capable": self.capable,
        }


def center_report(g: HomLeibnizAlgebra, cap: int | None = None) -> CenterReport:
    p = self_pair(g)
    zs = tensor_center(g, q=tensor_product(p, cap))
    zw = exterior_center(g, q=exterior_product(p, cap))
    capable = zw.dim == 0
    wit = [] if capable else [zw.basis.entries[0]]
    return CenterReport(g, center(g), alpha_center(g), zs, zw, capable, wit)


def is_capable(g: HomLeibnizAlgebra, cap: int | None = None) -> tuple[bool, CenterReport]:
    rep = center_report(g, cap)
    return rep.capable, rep


def _item(applies: bool, holds: bool | None = None, **detail) -> dict:
    if not applies:
        return {"status": "n/a", **detail}
    return {"status": "pass" if holds else "fail", **detail}


def capability_consistency_suite(g: HomLeibnizAlgebra, summands: tuple | None = None,
                                 cap: int | None = None, report: CenterReport | None = None) -> dict:
    """Cross-check the capability verdict against the structural criteria.

    ``summands=(g1, g2)`` declares ``g = g1 + g2`` for the direct-sum item.
    """
    rep = report or center_report(g, cap)
    perfect = is_perfect(g)
    surj = g.is_regular()
    cap_ = rep.capable
    derived = derived_ideal(g)
    ker_alpha = kernel_basis(g.alpha)
    items = {
        "a_perfect_surjective": _item(perfect and surj, cap_ == (rep.Z.dim == 0), center_dim=rep.Z.dim),
        "b_perfect": _item(perfect, cap_ == rep.Z_alpha.issubset(ker_alpha),
                           z_alpha_in_ker_alpha=rep.Z_alpha.issubset(ker_alpha)),
        "c_nonperfect_nonsurjective": _item(not perfect and not surj, cap_),
        "d_surjective_in_derived": _item(surj, rep.Z_star.issubset(derived) and rep.Z_wedge.issubset(derived)),
        "star_in_wedge": _item(True, rep.Z_star.issubset(rep.Z_wedge)),
        "wedge_in_center": _item(True, rep.Z_wedge.issubset(rep.Z)),
        "perfect_star_equals_wedge": _item(perfect, rep.Z_star == rep.Z_wedge),
        "central_ideals": _item(True, _central_invariant(g, rep.Z_star) and _central_invariant(g, rep.Z_wedge)),
    }
    if summands is not None:
        g1, g2 = summands
        if g1.dim + g2.dim != g.dim:
            raise ValueError("summands do not add up to the algebra")
        c1, r1 = is_capable(g1, cap)
        c2, r2 = is_capable(g2, cap)
        both = _direct_sum_space(r1.Z_wedge, r2.Z_wedge)
        incl = rep.Z_wedge.issubset(both)
        items["e_direct_sum_inclusion"] = _item(True, incl, summand_capable=[c1, c2],
                                                equality=rep.Z_wedge == both)
        items["e_regular_converse"] = _item(surj and cap_, c1 and c2)
        items["e_sum_of_capable"] = _item(c1 and c2, cap_)
    fails = [k for k, v in items.items() if v["status"] == "fail"]
    return {"capable": cap_, "perfect": perfect, "alpha_surjective": surj, "items": items,
            "failures": fails, "ok": not fails}


def _direct_sum_space(a: Subspace, b: Subspace) -> Subspace:
    n1, n2 = a.ambient_dim, b.ambient_dim
    vecs = [tuple(r) + (0,) * n2 for r in a.basis.entries] + [(0,) * n1 + tuple(r) for r in b.basis.entries]
    return Subspace.from_vectors(n1 + n2, vecs)


def _central_invariant(g: HomLeibnizAlgebra, s: Subspace) -> bool:
    return s.issubset(center(g)) and is_alpha_invariant(g, s)


def smallest_center_characterization_check(g: HomLeibnizAlgebra, n, cap: int | None = None) -> dict:
    """``n`` inside Z_wedge iff dim HL2(g/n) = dim HL2(g) + dim(n & [g,g]).

    Also checks that ``HL2(g) -> HL2(g/n)`` is injective exactly when n
    lies in the exterior center.
    """
    ns = _as_space(g, n)
    if not ns.issubset(center(g)) or not is_alpha_invariant(g, ns):
        raise ValidationError("n must be an alpha-invariant central subspace")
    zw = exterior_center(g, cap)
    inside = ns.issubset(zw)
    quo, pi = quotient_algebra(g, ns)
    h_g, h_q = hl2_dim(g), hl2_dim(quo)
    inter = (ns & derived_ideal(g)).dim
    identity = h_q == h_g + inter
    m = induced_map_on_homology(pi, 2)
    injective = m.rank() == h_g
    return {
        "n_dim": ns.dim, "n_in_Z_wedge": inside, "hl2_g": h_g, "hl2_quotient": h_q,
        "n_cap_derived": inter, "dimension_identity": identity, "induced_injective": injective,
        "iff_holds": inside == identity, "injectivity_iff_holds": inside == injective,
        "ok": inside == identity and inside == injective,
    }
