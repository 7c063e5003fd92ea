"""Command-line front-end.

    powertrees kappa  {group,graph,expr,zn,replaced} TARGET [options]
    powertrees verify {quick,full} [--jobs K]
    powertrees export {group,graph,expr,zn,replaced} TARGET --format {dot,edges,json}

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 internal
consistency assertion.  KAPPA_SEED fixes the randomized-case seed for verify.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import formulas as F
from . import verify
from .graphs import (
    CliqueReplacedSpec,
    SimpleGraph,
    clique_replaced,
    from_edge_list_text,
    to_dot,
    to_edge_list_text,
    universal_vertices,
)
from .groups import GroupConstructionError, GroupSpec, build_group, power_graph
from .linalg import InternalConsistencyError, kappa_matrix_tree
from .numth import FactoredNat, divisors_desc, euler_phi
from .spectra import expr_to_graph, family_expr, kappa_from_spectrum, parse_expr, spectrum


class UsageError(ValueError):
    pass


METHODS = ("auto", "matrix-tree", "formula", "spectrum", "smatrix")
KINDS = ("group", "graph", "expr", "zn", "replaced")

# families with a trusted closed form (extraspecial is excluded from `auto`
# because its circulating closed form disagrees with the determinant oracle;
# it stays available behind an explicit --method formula)
_FORMULA_FAMILIES = (
    "cyclic",
    "elementary",
    "quaternion",
    "heisenberg",
    "psl2",
    "frobenius_pq",
)
_SPECTRUM_FAMILIES = (
    "quaternion",
    "elementary",
    "heisenberg",
    "frobenius_pq",
    "extraspecial_exp_p2",
)


@dataclass(frozen=True)
class Request:
    kind: str
    target: str
    sizes: tuple[int, ...] | None
    method: str
    output: str
    factor_bound: int | None


@dataclass(frozen=True)
class ResultRecord:
    input: str
    method: str
    kappa: FactoredNat
    kappa_decimal: str
    vertex_count: int
    universal_count: int
    elapsed_ms: float

    def to_json(self) -> str:
        return json.dumps(
            {
                "input": self.input,
                "method": self.method,
                "kappa_decimal": self.kappa_decimal,
                "kappa_factored": {
                    "factors": [[p, e] for p, e in self.kappa.factors],
                    "residual": self.kappa.residual,
                },
                "vertex_count": self.vertex_count,
                "universal_count": self.universal_count,
                "elapsed_ms": self.elapsed_ms,
            }
        )


def _load_target(req: Request):
    """Resolve the request target to (graph, group_spec, clique_spec, expr)."""
    kind = req.kind
    if kind == "group":
        spec = GroupSpec.parse(req.target)
        return power_graph(build_group(spec)), spec, None, None
    if kind == "graph":
        with open(req.target, "r", encoding="utf-8") as fh:
            return from_edge_list_text(fh.read()), None, None, None
    if kind == "expr":
        expr = parse_expr(req.target)
        return expr_to_graph(expr), None, None, expr
    if kind == "zn":
        n = int(req.target)
        cspec = F.divisor_clique_spec(n)
        return clique_replaced(cspec), None, cspec, None
    if kind == "replaced":
        if not req.sizes:
            raise UsageError("replaced targets need --sizes x1,x2,...")
        with open(req.target, "r", encoding="utf-8") as fh:
            base = from_edge_list_text(fh.read())
        cspec = CliqueReplacedSpec(base, req.sizes)
        return clique_replaced(cspec), None, cspec, None
    raise UsageError(f"unknown target kind {kind!r}")


def _group_formula(spec: GroupSpec) -> FactoredNat:
    family, params = spec.family, spec.params
    if family == "cyclic":
        return F.kappa_cyclic(*params)
    if family == "elementary":
        p, n = params
        return F.kappa_epo({p: (p**n - 1) // (p - 1)})
    if family == "quaternion":
        return F.kappa_quaternion(*params)
    if family == "heisenberg":
        return F.kappa_heisenberg(*params)
    if family == "extraspecial_exp_p2":
        return F.kappa_extraspecial_exp_p2(*params)
    if family == "psl2":
        return F.kappa_psl2(*params)
    if family == "frobenius_pq":
        return F.kappa_frobenius_pq(*params)
    raise UsageError(f"no closed form for family {family!r}")


def _valid_methods(kind: str, group_spec: GroupSpec | None) -> list[str]:
    if kind == "group":
        out = ["auto", "matrix-tree"]
        if group_spec and (
            group_spec.family in _FORMULA_FAMILIES
            or group_spec.family == "extraspecial_exp_p2"
        ):
            out.append("formula")
        if group_spec and group_spec.family in _SPECTRUM_FAMILIES:
            out.append("spectrum")
        return out
    if kind == "graph":
        return ["auto", "matrix-tree"]
    if kind == "expr":
        return ["auto", "matrix-tree", "spectrum"]
    if kind in ("zn", "replaced"):
        return ["auto", "matrix-tree", "formula", "smatrix"]
    raise UsageError(f"unknown target kind {kind!r}")


def compute_kappa(req: Request) -> ResultRecord:
    start = time.perf_counter()
    group_spec = GroupSpec.parse(req.target) if req.kind == "group" else None
    valid = _valid_methods(req.kind, group_spec)
    method = req.method
    if method == "auto":
        if req.kind == "group":
            method = "formula" if (group_spec.family in _FORMULA_FAMILIES) else "matrix-tree"
        elif req.kind == "expr":
            method = "spectrum"
        elif req.kind in ("zn", "replaced"):
            method = "formula"
        else:
            method = "matrix-tree"
    elif method not in valid:
        raise UsageError(
            f"method {method!r} not valid for this target; valid: {', '.join(valid)}"
        )
    graph, group_spec, clique_spec, expr = _load_target(req)
    bound = req.factor_bound
    if method == "matrix-tree":
        value = kappa_matrix_tree(graph)
        kappa = FactoredNat.from_int(value, bound if bound else max(graph.n, 1000))
    elif method == "formula":
        if req.kind == "group":
            kappa = _group_formula(group_spec)
        else:
            kappa = (
                F.kappa_cyclic(int(req.target))
                if req.kind == "zn"
                else F.kappa_clique_replaced_formula(clique_spec, bound)
            )
    elif method == "spectrum":
        if req.kind == "group":
            expr = family_expr(group_spec)
        kappa = kappa_from_spectrum(spectrum(expr))
    elif method == "smatrix":
        kappa = F.kappa_clique_replaced_smatrix(clique_spec, factor_bound=bound)
    else:
        raise UsageError(f"unknown method {method!r}")
    elapsed = (time.perf_counter() - start) * 1000.0
    return ResultRecord(
        input=f"{req.kind} {req.target}" + (f" sizes={','.join(map(str, req.sizes))}" if req.sizes else ""),
        method=method,
        kappa=kappa,
        kappa_decimal=str(kappa.value()),
        vertex_count=graph.n,
        universal_count=len(universal_vertices(graph)),
        elapsed_ms=round(elapsed, 3),
    )


def _emit_record(record: ResultRecord, output: str) -> str:
    if output == "decimal":
        return record.kappa_decimal
    if output == "factored":
        return str(record.kappa)
    if output == "json":
        return record.to_json()
    raise UsageError(f"unknown output format {output!r}")


def _parse_sizes(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad --sizes value {text!r}: {exc}") from None


def cmd_kappa(args) -> int:
    req = Request(
        kind=args.kind,
        target=args.target,
        sizes=_parse_sizes(args.sizes),
        method=args.method,
        output=args.output,
        factor_bound=args.factor_bound,
    )
    record = compute_kappa(req)
    print(_emit_record(record, req.output))
    return 0


def cmd_verify(args) -> int:
    started = time.perf_counter()
    report, code = verify.run_suite(args.suite, seed=verify.default_seed(), jobs=args.jobs)
    print(report, end="")
    print(f"elapsed: {time.perf_counter() - started:.1f}s", file=sys.stderr)
    return code


def _zn_description(n: int) -> str:
    divs = divisors_desc(n)
    base = F.divisor_clique_spec(n).base
    return json.dumps(
        {
            "n": n,
            "divisors": divs,
            "sizes": [euler_phi(d) for d in divs],
            "base_edges": list(base.edges()),
            "vertex_count": sum(euler_phi(d) for d in divs),
        }
    )


def _graph_json(g: SimpleGraph) -> str:
    return json.dumps(
        {
            "vertex_count": g.n,
            "edges": list(g.edges()),
            "labels": [g.label(v) for v in range(g.n)],
        }
    )


def cmd_export(args) -> int:
    req = Request(args.kind, args.target, _parse_sizes(args.sizes), "auto", "decimal", None)
    if args.format == "json" and args.kind == "zn":
        text = _zn_description(int(args.target))
    else:
        graph = _load_target(req)[0]
        if args.format == "dot":
            text = to_dot(graph)
        elif args.format == "edges":
            text = to_edge_list_text(graph)
        elif args.format == "json":
            text = _graph_json(graph)
        else:
            raise UsageError(f"unknown export format {args.format!r}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powertrees",
        description="Exact spanning-tree counts for power graphs and clique-replaced graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_kappa = sub.add_parser("kappa", help="compute a spanning-tree count")
    p_kappa.add_argument("kind", choices=KINDS)
    p_kappa.add_argument(
        "target",
        help="group spec (family:params), edge-list file, expression string, or n",
    )
    p_kappa.add_argument("--sizes", help="comma-separated block sizes for 'replaced'")
    p_kappa.add_argument("--method", choices=METHODS, default="auto")
    p_kappa.add_argument("--output", choices=("decimal", "factored", "json"), default="decimal")
    p_kappa.add_argument("--factor-bound", type=int, default=None, metavar="N",
                         help="trial-division bound for factoring determinant results")
    p_kappa.set_defaults(fn=cmd_kappa)

    p_verify = sub.add_parser("verify", help="run the formula-vs-oracle suites")
    p_verify.add_argument("suite", choices=("quick", "full"))
    p_verify.add_argument("--jobs", type=int, default=1, metavar="K",
                          help="worker processes for independent cases")
    p_verify.set_defaults(fn=cmd_verify)

    p_export = sub.add_parser("export", help="write a constructed graph to a file")
    p_export.add_argument("kind", choices=KINDS)
    p_export.add_argument("target")
    p_export.add_argument("--sizes", help="comma-separated block sizes for 'replaced'")
    p_export.add_argument("--format", choices=("dot", "edges", "json"), required=True)
    p_export.add_argument("--out", help="output file (default stdout)")
    p_export.set_defaults(fn=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GroupConstructionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
