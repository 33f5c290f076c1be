"""Command-line interface: algebra files in, deterministic reports out.

An algebra argument is a path to an algebra file, ``-`` for stdin, or
``catalog:NAME(params)``.  The ``check`` command also accepts the bare
word ``catalog`` to sweep every catalog entry.

Exit codes: 0 when everything holds, 1 when a consistency check produced
a counterexample, 2 for usage, parse and size-cap errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from . import catalog
from .algebra import (
    HomLeibnizAlgebra,
    abelianization,
    alpha_center,
    center,
    derived_ideal,
    is_perfect,
    validate_algebra,
)
from .capability import capability_consistency_suite, center_report
from .errors import CapExceeded, HomLeibnizError, IntegrityError, ValidationError
from .exactla import Mat, Subspace, format_scalar, parse_scalar
from .homology import DEFAULT_CAP, chain_complex, hl2_dim, homology
from .products import (
    DEFAULT_COMPONENT_CAP,
    direct_sum_formulas_check,
    eight_term_check,
    exterior_product,
    extension,
    pair_from_ideals,
    self_pair,
    square_subspace,
    tensor_product,
)

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ----------------------------------------------------------------------
# algebra files


def parse_algebra(text: str) -> HomLeibnizAlgebra:
    """Parse an algebra file.  The result is not validated against the axioms."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"JSON syntax error at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise UsageError("algebra file must be a JSON object")
    missing = {"dim", "bracket", "alpha"} - doc.keys()
    if missing:
        raise UsageError(f"algebra file lacks {sorted(missing)}")
    if doc.get("field", "Q") != "Q":
        raise UsageError(f"unsupported field {doc['field']!r}; only Q is available")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise UsageError("dim must be a non-negative integer")
    basis = doc.get("basis") or [f"e{i + 1}" for i in range(dim)]
    if len(basis) != dim or not all(isinstance(b, str) for b in basis):
        raise UsageError("basis must list one string label per dimension")
    if len(set(basis)) != dim:
        raise UsageError("basis labels must be distinct")

    def index(v, where):
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < dim:
            raise UsageError(f"{where}: index {v!r} out of range 0..{dim - 1}")
        return v

    def scalar(v, where):
        if not isinstance(v, str):
            raise UsageError(f"{where}: coefficients are written as strings like \"p/q\"")
        try:
            return parse_scalar(v)
        except ValueError as exc:
            raise UsageError(f"{where}: {exc}") from None

    products: dict = {}
    for n, entry in enumerate(doc["bracket"]):
        where = f"bracket[{n}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise UsageError(f"{where}: expected [i, j, k, \"p/q\"]")
        i, j, k = (index(v, where) for v in entry[:3])
        slot = products.setdefault((i, j), {})
        if k in slot:
            raise UsageError(f"{where}: duplicate entry ({i},{j},{k})")
        slot[k] = scalar(entry[3], where)
    cols: list[dict] = [{} for _ in range(dim)]
    for n, entry in enumerate(doc["alpha"]):
        where = f"alpha[{n}]"
        if not isinstance(entry, list) or len(entry) != 3:
            raise UsageError(f"{where}: expected [i, j, \"p/q\"]")
        i, j = index(entry[0], where), index(entry[1], where)
        if j in cols[i]:
            raise UsageError(f"{where}: duplicate entry ({i},{j})")
        cols[i][j] = scalar(entry[2], where)
    alpha = Mat.from_sparse_columns([{k: c for k, c in col.items() if c} for col in cols], dim)
    return HomLeibnizAlgebra(dim, products, alpha, doc.get("name", ""), basis)


def algebra_document(g: HomLeibnizAlgebra) -> dict:
    bracket = [[i, j, k, format_scalar(c)] for (i, j), v in sorted(g.products.items()) for k, c in sorted(v.items())]
    alpha = [[i, j, format_scalar(c)] for i in range(g.dim) for j, c in sorted(g.alpha_column(i).items())]
    return {"name": g.name, "field": "Q", "dim": g.dim, "basis": list(g.basis_labels),
            "bracket": bracket, "alpha": alpha}


def serialize_algebra(g: HomLeibnizAlgebra) -> str:
    return json.dumps(algebra_document(g), separators=(",", ":"), ensure_ascii=False) + "\n"


def load_algebra(arg: str) -> HomLeibnizAlgebra:
    if arg.startswith("catalog:"):
        try:
            return catalog.build_ref(arg[len("catalog:"):])
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        text = sys.stdin.read() if arg == "-" else open(arg, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {arg}: {exc.strerror}") from None
    return parse_algebra(text)


def _require_valid(g: HomLeibnizAlgebra) -> None:
    viol = validate_algebra(g)
    if viol:
        v = viol[0]
        raise UsageError(f"{g.name or 'input'} is not a Hom-Leibniz algebra: {v.axiom} fails at {list(v.indices)}"
                         " (run `validate` for the full report)")


# ----------------------------------------------------------------------
# payload helpers


def _space(s: Subspace) -> dict:
    return {"dim": s.dim, "basis": [[format_scalar(x) for x in row] for row in s.basis.entries]}


def _mat(m: Mat) -> list:
    return [[format_scalar(x) for x in row] for row in m.entries]


def _sparse(v: dict, labels) -> list:
    return [[labels[k], format_scalar(c)] for k, c in sorted(v.items())]


def _tensor_labels(g: HomLeibnizAlgebra, n: int) -> list[str]:
    out = [""]
    for _ in range(n):
        out = [f"{a}(x){b}" if a else b for a in out for b in g.basis_labels]
    return out


def _status(ok: bool) -> str:
    return "ok" if ok else "counterexample"


# ----------------------------------------------------------------------
# commands (each returns results, witnesses, ok)


def cmd_validate(g, args):
    viol = validate_algebra(g)
    return {"valid": not viol, "violations": len(viol)}, {"violations": [v.to_json() for v in viol[:20]]}, not viol


def cmd_invariants(g, args):
    _require_valid(g)
    ab, _ = abelianization(g)
    res = {
        "dim": g.dim,
        "center": _space(center(g)),
        "left_center": _space(center(g, "left")),
        "alpha_center": _space(alpha_center(g)),
        "derived_ideal": _space(derived_ideal(g)),
        "perfect": is_perfect(g),
        "abelian": g.is_abelian(),
        "regular": g.is_regular(),
        "alpha_rank": g.alpha.rank(),
        "abelianization": {"dim": ab.dim, "alpha": _mat(ab.alpha)},
    }
    return res, {}, True


def cmd_homology(g, args):
    _require_valid(g)
    n_max = args.max_degree
    if n_max < 1:
        raise UsageError("--max-degree must be at least 1")
    cc = chain_complex(g, n_max, args.cap)
    degrees = {}
    for n in range(1, n_max + 1):
        h = homology(g, n, complex_=cc)
        labels = _tensor_labels(g, n)
        degrees[str(n)] = {
            "dim": h.dimension,
            "cycles_dim": h.cycles.dim,
            "boundaries_dim": h.bounds.dim,
            "rank_d": cc.rank(n),
            "rank_d_next": cc.rank(n + 1),
            "representatives": [_sparse({k: x for k, x in enumerate(r) if x}, labels) for r in h.representative_basis],
            "alpha_action": _mat(h.induced_endo),
        }
    return {"max_degree": n_max, "degrees": degrees}, {}, True


def _ideal(g: HomLeibnizAlgebra, spec: str | None):
    if spec is None or spec == "all":
        return None
    named = {"center": center, "alpha_center": alpha_center, "derived": derived_ideal}
    if spec in named:
        return named[spec](g)
    labels = [s.strip() for s in spec.split(",") if s.strip()]
    unknown = [s for s in labels if s not in g.basis_labels]
    if unknown:
        raise UsageError(f"unknown basis labels {unknown} in ideal spec {spec!r}")
    return Subspace.span_of_units(g.dim, [g.basis_labels.index(s) for s in labels])


def cmd_product(g, args):
    _require_valid(g)
    specs = args.ideal or []
    if len(specs) > 2:
        raise UsageError("at most two --ideal options")
    specs = specs + [None] * (2 - len(specs))
    try:
        pair = pair_from_ideals(g, _ideal(g, specs[0]), _ideal(g, specs[1]))
    except ValidationError as exc:
        raise UsageError(str(exc)) from None
    build = tensor_product if args.kind == "tensor" else exterior_product
    q = build(pair, args.product_cap)
    res = {
        "kind": args.kind,
        "M_dim": pair.M.dim,
        "N_dim": pair.N.dim,
        "generators": q.F_dim,
        "relations_dim": q.relation_space.dim,
        "dim": q.dim,
        "lambda_kernel": _space(q.lambda_kernel()),
        "lambda_M_kernel_dim": kernel_dim(q.lambda_M.matrix),
        "lambda_N_kernel_dim": kernel_dim(q.lambda_N.matrix),
        "alpha": _mat(q.total.alpha),
        "product": algebra_document(q.total),
    }
    if args.kind == "tensor":
        res["square"] = _space(square_subspace(pair, q))
    return res, {}, True


def kernel_dim(m: Mat) -> int:
    return m.cols - m.rank()


def cmd_capability(g, args):
    _require_valid(g)
    rep = center_report(g, args.product_cap)
    suite = capability_consistency_suite(g, report=rep)
    res = rep.to_json()
    res["suite"] = {k: v["status"] for k, v in suite["items"].items()}
    wit = {"Z_wedge": _space(rep.Z_wedge)} if not rep.capable else {}
    if suite["failures"]:
        wit["suite_failures"] = suite["failures"]
    return res, wit, suite["ok"]


# ----------------------------------------------------------------------
# check suites


def _hopf(g, args):
    h = hl2_dim(g, args.cap)
    k = exterior_product(self_pair(g), args.product_cap).lambda_kernel().dim
    return {"hl2": h, "ker_lambda": k, "ok": h == k}


def _sequence(g, args):
    out = {}
    ideals = {"alpha_center": alpha_center(g), "derived": derived_ideal(g)}
    seen = set()
    for name, m in ideals.items():
        key = tuple(m.basis.entries)
        if m.dim in (0, g.dim) or key in seen:
            continue
        seen.add(key)
        rep = eight_term_check(extension(g, m), args.product_cap)
        out[name] = {"dims": rep["dims"], "exact": {k: v["exact"] for k, v in rep["nodes"].items()},
                     "surjective_end": rep["surjective_end"], "ok": rep["ok"]}
    out["ok"] = all(v["ok"] for v in out.values())
    return out


# partners with surjective endomorphism, for which the direct-sum formulas apply
DSUM_PARTNERS = ("abelian(n=1)", "abelian(n=1,alpha='scalar:2')", "abelian(n=1,alpha='scalar:-1')")


def _dsum(g, args):
    partner = catalog.build_ref(random.Random(args.seed).choice(DSUM_PARTNERS))
    cap = args.product_cap
    if g.dim + partner.dim > cap:
        return {"partner": partner.name, "skipped": f"sum exceeds product cap {cap}", "ok": True}
    rep = direct_sum_formulas_check(g, partner, cap)
    return {"partner": partner.name, "JL2": rep["JL2"]["holds"], "HL2": rep["HL2"]["holds"],
            "HL2_surjective": None if rep["HL2_surjective"] is None else rep["HL2_surjective"]["holds"],
            "ok": rep["ok"]}


def _capability(g, args):
    suite = capability_consistency_suite(g, cap=args.product_cap)
    return {"capable": suite["capable"], "failures": suite["failures"], "ok": suite["ok"]}


SUITES = {"hopf": _hopf, "sequence": _sequence, "dsum": _dsum, "capability": _capability}


def _run_suites(g, names, args):
    out = {}
    for name in names:
        try:
            out[name] = SUITES[name](g, args)
        except CapExceeded as exc:
            out[name] = {"skipped": str(exc), "ok": True}
    return out


def cmd_check(targets, args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for _, g in targets:
        _require_valid(g)
    if args.jobs > 1 and len(targets) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(lambda t: _run_suites(t[1], names, args), targets))
    else:
        rows = [_run_suites(g, names, args) for _, g in targets]
    table = {ref: row for (ref, _), row in zip(targets, rows)}
    bad = sorted(f"{ref}:{s}" for ref, row in table.items() for s, r in row.items() if not r["ok"])
    return {"suites": names, "entries": table}, ({"failing": bad} if bad else {}), not bad


# ----------------------------------------------------------------------
# output


def _flatten(prefix, value, out):
    if isinstance(value, dict) and value:
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, out)
    else:
        out.append(f"{prefix}: {json.dumps(value, separators=(',', ':'), ensure_ascii=False)}")


def _dump(value, level: int = 0) -> str:
    """JSON with one key per line; lists stay on a single line."""
    if isinstance(value, dict) and value:
        pad = "  " * (level + 1)
        body = ",\n".join(f"{pad}{json.dumps(k)}: {_dump(v, level + 1)}" for k, v in value.items())
        return "{\n" + body + "\n" + "  " * level + "}"
    return json.dumps(value, separators=(", ", ": "), ensure_ascii=False)


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump(report) + "\n"
    lines: list[str] = []
    _flatten("", report, lines)
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest chain-space dimension (default %(default)s)")
    common.add_argument("--product-cap", type=int, default=DEFAULT_COMPONENT_CAP,
                        help="largest factor dimension in tensor/exterior products (default %(default)s)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for partner choice in sweeps")
    common.add_argument("--jobs", type=int, default=1, help="worker threads for catalog sweeps")

    p = argparse.ArgumentParser(prog="homleibniz", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("validate", "invariants", "capability"):
        sub.add_parser(name, parents=[common]).add_argument("algebra")
    h = sub.add_parser("homology", parents=[common])
    h.add_argument("algebra")
    h.add_argument("--max-degree", type=int, default=2)
    pr = sub.add_parser("product", parents=[common])
    pr.add_argument("algebra")
    pr.add_argument("--kind", choices=("tensor", "exterior"), default="exterior")
    pr.add_argument("--ideal", action="append",
                    help="all, center, alpha_center, derived, or comma-separated basis labels; give up to two")
    c = sub.add_parser("check", parents=[common])
    c.add_argument("algebra", help="algebra argument, or `catalog` for every catalog entry")
    c.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    cat = sub.add_parser("catalog", parents=[common])
    cat.add_argument("action", choices=("list", "emit"))
    cat.add_argument("ref", nargs="?")
    return p


COMMANDS = {"validate": cmd_validate, "invariants": cmd_invariants, "homology": cmd_homology,
            "product": cmd_product, "capability": cmd_capability}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.jobs < 1 or args.cap < 1 or args.product_cap < 1:
            raise UsageError("--jobs, --cap and --product-cap must be positive")
        if args.command == "catalog":
            if args.action == "list":
                res = {"entries": [e.ref for e in catalog.entries()]}
                report = {"command": "catalog list", "algebra": None, "results": res, "witnesses": {}, "status": "ok"}
                out.write(render(report, args.format))
            else:
                if not args.ref:
                    raise UsageError("catalog emit needs NAME(params)")
                out.write(serialize_algebra(load_algebra("catalog:" + args.ref)))
            return EXIT_OK
        if args.command == "check":
            if args.algebra == "catalog":
                targets = [(e.ref, e.build()) for e in catalog.entries()]
                label = "catalog"
            else:
                g = load_algebra(args.algebra)
                targets, label = [(g.name or args.algebra, g)], g.name or args.algebra
            res, wit, ok = cmd_check(targets, args)
        else:
            g = load_algebra(args.algebra)
            label = g.name or args.algebra
            res, wit, ok = COMMANDS[args.command](g, args)
    except (UsageError, CapExceeded) as exc:
        print(f"homleibniz: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IntegrityError as exc:
        print(f"homleibniz: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    except HomLeibnizError as exc:
        print(f"homleibniz: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {"command": args.command, "algebra": label, "results": res, "witnesses": wit, "status": _status(ok)}
    out.write(render(report, args.format))
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def main() -> None:
    sys.exit(run())
