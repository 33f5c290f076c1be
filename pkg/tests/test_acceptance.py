"""Acceptance suite: one PASS/FAIL line per criterion, all exact.

Run with ``pytest tests/test_acceptance.py -s`` or as a plain script.
"""

import io
import time

import pytest

from homleibniz import catalog
from homleibniz.algebra import (
    HomAction,
    alpha_center,
    center,
    derived_ideal,
    direct_sum,
    is_perfect,
    validate_action,
    validate_algebra,
)
from homleibniz.capability import capability_consistency_suite, center_report
from homleibniz.catalog import (
    abelian,
    example_5_2_i,
    example_5_2_ii,
    example_5_2_iii,
    heisenberg,
    scaling_action,
    sl2,
    sl2_hemi,
)
from homleibniz.cli import run
from homleibniz.exactla import Subspace, kernel_basis
from homleibniz.homology import hl2_dim
from homleibniz.products import (
    direct_sum_formulas_check,
    eight_term_check,
    exterior_product,
    extension,
    pair_from_ideals,
    self_pair,
    split_extension_from_action,
    split_injectivity_check,
    square_subspace,
    tensor_product,
)

E3 = Subspace.from_vectors(3, [[0, 0, 1]])
RESULTS = {}


def _report(n, ok, detail, capsys=None):
    line = f"CRITERION {n}: {'PASS' if ok else 'FAIL'} {detail}"
    RESULTS[n] = ok
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    return ok


def _entries():
    return [(e.ref, e.build()) for e in catalog.entries()]


# ----------------------------------------------------------------------


def criterion_1():
    t0 = time.perf_counter()
    algs = _entries()
    bad = [ref for ref, g in algs if validate_algebra(g)]
    pinpointed = 0
    mutants = catalog.mutants()
    for _id, g, axiom, idx in mutants:
        viol = validate_algebra(g)
        if viol and (viol[0].axiom, tuple(viol[0].indices)) == (axiom, tuple(idx)):
            pinpointed += 1
    dt = time.perf_counter() - t0
    ok = len(algs) >= 12 and not bad and pinpointed == len(mutants) >= 1 and dt < 1
    return ok, f"{len(algs)} entries valid, {pinpointed}/{len(mutants)} mutants pinpointed, {dt:.2f}s"


def criterion_2():
    t0 = time.perf_counter()
    rows = []
    for ref, g in _entries():
        if g.dim > 5:
            continue
        rows.append((ref, hl2_dim(g), exterior_product(self_pair(g)).lambda_kernel().dim))
    pinned = {"example_5_2_iii": 6, "abelian(n=2)": 4}
    got = {ref: h for ref, h, _ in rows}
    dt = time.perf_counter() - t0
    mism = [r for r in rows if r[1] != r[2]]
    ok = not mism and all(got[k] == v for k, v in pinned.items()) and dt < 30
    return ok, f"{len(rows)} algebras, {len(mism)} mismatches, pinned {[got[k] for k in pinned]}, {dt:.1f}s"


def criterion_3():
    alphas = {1: ["id", "zero", "scalar:2", "scalar:-1/3"],
              2: ["id", "zero", "shift", "diag:1,-1"],
              3: ["id", "zero", "shift", "diag:2,0,1"]}
    table = {}
    ok = True
    for n, specs in alphas.items():
        vals = set()
        for a in specs:
            g = abelian(n, a)
            w = exterior_product(self_pair(g)).dim
            h = hl2_dim(g)
            ok &= w == h
            vals.add(h)
        ok &= vals == {n * n}
        table[n] = sorted(vals)
    return ok, f"dim HL2 = dim g^g per dimension {table}"


def _split_actions():
    return [
        ("scaling", scaling_action()),
        ("trivial line on H(1)", HomAction.trivial(abelian(1), heisenberg(1))),
        ("sl2 on itself", HomAction.by_bracket(sl2())),
        ("ex523 on itself", HomAction.by_bracket(example_5_2_iii())),
        ("null plane on itself", HomAction.by_bracket(abelian(2, "zero"))),
    ]


def criterion_4():
    out = []
    ok = True
    for label, a in _split_actions():
        valid = validate_action(a) == []
        inj = split_injectivity_check(a)
        seq = eight_term_check(split_extension_from_action(a))["split_sequence"]
        good = valid and inj["ok"] and seq["dim_identity"] and seq["injective"]
        ok &= good
        out.append(f"{label}:{'ok' if good else 'bad'}")
    return ok and len(out) >= 3, ", ".join(out)


def criterion_5():
    exts = [("E3 in ex523", extension(example_5_2_iii(), E3))]
    for ref, g in _entries():
        if g.dim > 4:
            continue
        for tag, m in (("Z_alpha", alpha_center(g)), ("derived", None)):
            m = m if m is not None else derived_ideal(g)
            if 0 < m.dim < g.dim:
                exts.append((f"{tag} in {ref}", extension(g, m)))
    bad = []
    for label, e in exts:
        rep = eight_term_check(e)
        if not (rep["ok"] and all(n["exact"] for n in rep["nodes"].values())):
            bad.append(label)
    ok = len(exts) >= 4 and not bad
    return ok, f"{len(exts)} extensions exact at every interior node, failures {bad}"


def _pairs():
    return [
        (example_5_2_iii(), abelian(1), None),
        (heisenberg(1), abelian(1, "scalar:2"), None),
        (sl2(), sl2(), None),
        (abelian(1), abelian(2, "diag:1,-1"), None),
        (heisenberg(1), heisenberg(1), None),
        (abelian(2, "zero"), abelian(1, "zero"), None),
        (sl2(), sl2_hemi(), 8),
        (sl2("zero"), abelian(1), None),
    ]


def criterion_6():
    ok = True
    surj = 0
    for g1, g2, cap in _pairs():
        rep = direct_sum_formulas_check(g1, g2, cap)
        ok &= rep["ok"]
        surj += rep["HL2_surjective"] is not None
    pp = direct_sum_formulas_check(sl2(), sl2())
    ok &= pp["cross"]["g1ab*g2ab"] == pp["cross"]["g2ab*g1ab"] == 0
    return ok, f"{len(_pairs())} pairs hold ({surj} with the surjective refinement), perfect cross terms 0"


def criterion_7():
    t0 = time.perf_counter()
    verdicts = {
        "example_5_2_i(1)": (example_5_2_i(1), True),
        "example_5_2_i(2)": (example_5_2_i(2), True),
        "example_5_2_ii(seed=0)": (example_5_2_ii(seed=0), True),
        "example_5_2_ii(seed=3)": (example_5_2_ii(seed=3), True),
        "example_5_2_iii": (example_5_2_iii(), True),
        "heisenberg(2)": (heisenberg(2), False),
        "sl2": (sl2(), True),
    }
    ok = True
    for name, (g, want) in verdicts.items():
        ok &= center_report(g).capable == want
    z = center_report(heisenberg(2)).Z_wedge
    ok &= z == Subspace.from_vectors(5, [[0, 0, 0, 0, 1]])
    failures = []
    for ref, g in _entries():
        failures += [f"{ref}:{k}" for k in capability_consistency_suite(g)["failures"]]
    h2, n = heisenberg(2), abelian(1, "zero")
    for g1, g2, cap in ((heisenberg(1), sl2(), None), (h2, n, None), (example_5_2_iii(), abelian(1), None),
                        (h2, h2, 10)):
        rep = capability_consistency_suite(direct_sum(g1, g2), summands=(g1, g2), cap=cap)
        failures += [f"{g1.name}+{g2.name}:{k}" for k in rep["failures"]]
    dt = time.perf_counter() - t0
    ok &= not failures and dt < 60
    return ok, f"verdicts match, H(2) witness z, suite failures {failures}, {dt:.1f}s"


def criterion_8():
    bad = []
    for ref, g in _entries():
        p = self_pair(g)
        t = tensor_product(p)
        if not square_subspace(p, t) <= alpha_center(t.total):
            bad.append(f"{ref}:square")
        for m in (None, alpha_center(g)):
            pr = pair_from_ideals(g, m, None)
            for build in (tensor_product, exterior_product):
                q = build(pr)
                z = center(q.total)
                for mat in (q.lambda_.matrix, q.lambda_M.matrix, q.lambda_N.matrix):
                    if not kernel_basis(mat) <= z:
                        bad.append(f"{ref}:lambda")
        rep = center_report(g)
        if not rep.Z_star <= rep.Z_wedge:
            bad.append(f"{ref}:star")
        if is_perfect(g) and rep.Z_star != rep.Z_wedge:
            bad.append(f"{ref}:perfect")
    return not bad, f"full catalog, violations {bad}"


def _cli(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def criterion_9():
    cmds = [
        ("check", "catalog", "--format", "json"),
        ("capability", "catalog:heisenberg(n=2)", "--format", "json"),
        ("homology", "catalog:example_5_2_iii", "--max-degree", "3"),
        ("product", "catalog:sl2", "--kind", "tensor", "--format", "json"),
        ("invariants", "catalog:example_5_2_ii(seed=0)"),
    ]
    ok = True
    for argv in cmds:
        a, b = _cli(*argv), _cli(*argv)
        ok &= a == b and a[0] == 0
    seq = _cli("check", "catalog", "--format", "json", "--jobs", "1")
    par = _cli("check", "catalog", "--format", "json", "--jobs", "4")
    ok &= seq == par
    return ok, f"{len(cmds)} reports byte-identical across runs, catalog sweep identical for 1 and 4 threads"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("n", range(1, 10))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    assert _report(n, ok, detail, capsys), detail


if __name__ == "__main__":
    for i, fn in enumerate(CRITERIA, 1):
        _report(i, *fn())
    raise SystemExit(0 if all(RESULTS.values()) else 1)
