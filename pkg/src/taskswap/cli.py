"""Command line front end.

Inputs are JSON files: a topology object such as ``{"kind": "ring", "n": 8}``,
assignments as one-line arrays (entry ``i`` is the task held by agent
``i + 1``) and plans as ``{"length": L, "swaps": [[a, b], ...]}``.  Results
go to stdout as JSON, diagnostics to stderr.

Exit codes: 0 success, 1 plan rejected by ``verify``, 2 unreadable or
malformed input, 3 invalid input, 4 oracle cap exceeded, 5 internal
invariant violated.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from .cost import CostParams, benefit_report, migration_cost
from .errors import (
    CapExceededError,
    PlannerInvariantError,
    SizeMismatchError,
    TaskSwapError,
    TopologyError,
    UnknownTopologyError,
)
from .oracle import (
    DEFAULT_CAP,
    FAMILIES,
    CayleyFamily,
    bfs_distance,
    check_cap,
    diameter_record,
    diameter_survey,
    shortest_plan,
    survey_to_csv,
    survey_to_json,
)
from .perm import Permutation, Transposition
from .plan import SwapPlan, check_plan
from .planners import plan as plan_swaps
from .topology import KINDS, TaskSwapGraph, TopologySpec, build_graph

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_CAP = 4
EXIT_INVARIANT = 5


class ParseError(Exception):
    def __init__(self, path: str, message: str, field: str | None = None, line: int | None = None):
        self.path, self.field, self.line = path, field, line
        where = path
        if line is not None:
            where += f":{line}"
        if field is not None:
            where += f": field {field!r}"
        super().__init__(f"{where}: {message}")


class UsageError(Exception):
    """Missing or conflicting command line options."""


def _line_of(text: str, needle: str) -> int:
    idx = text.find(needle)
    return 1 if idx < 0 else text.count("\n", 0, idx) + 1


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(path, f"cannot read file ({exc.strerror})") from exc
    try:
        return json.loads(text), text
    except json.JSONDecodeError as exc:
        raise ParseError(path, f"invalid JSON: {exc.msg}", line=exc.lineno) from exc


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def read_topology(path: str) -> TopologySpec:
    data, text = _load_json(path)
    if not isinstance(data, dict):
        raise ParseError(path, "topology must be a JSON object", line=1)

    def fail(field, message):
        raise ParseError(path, message, field=field, line=_line_of(text, f'"{field}"'))

    for field in ("kind", "n"):
        if field not in data:
            raise ParseError(path, "missing required field", field=field, line=1)
    if data["kind"] not in KINDS:
        fail("kind", f"unsupported topology {data['kind']!r}; expected one of {', '.join(KINDS)}")
    if not _is_int(data["n"]):
        fail("n", "must be an integer")
    if "k" in data and not _is_int(data["k"]):
        fail("k", "must be an integer")
    edges = data.get("edges")
    if edges is not None:
        if not isinstance(edges, list) or not all(
            isinstance(e, list) and len(e) == 2 and all(_is_int(x) for x in e) for e in edges
        ):
            fail("edges", "must be a list of [a, b] integer pairs")
        edges = tuple(tuple(e) for e in edges)
    try:
        return TopologySpec(kind=data["kind"], n=data["n"], k=data.get("k"), edges=edges)
    except UnknownTopologyError as exc:
        fail("kind", str(exc))


def read_assignment(path: str, field: str) -> Permutation:
    data, text = _load_json(path)
    if isinstance(data, dict):
        if "assignment" not in data:
            raise ParseError(path, "expected an array or an object with 'assignment'", field=field, line=1)
        line = _line_of(text, '"assignment"')
        data = data["assignment"]
    else:
        line = _line_of(text, "[")
    if not isinstance(data, list) or not data or not all(_is_int(x) for x in data):
        raise ParseError(path, "assignment must be a non-empty array of integers", field=field, line=line)
    return Permutation(tuple(data))


def read_plan(path: str) -> SwapPlan:
    data, text = _load_json(path)
    if isinstance(data, list):
        data = {"swaps": data}
        text = '"swaps"' + text
    if not isinstance(data, dict) or "swaps" not in data:
        raise ParseError(path, "plan must be an object with a 'swaps' array", field="swaps", line=1)
    swaps = data["swaps"]
    if not isinstance(swaps, list):
        raise ParseError(path, "must be an array", field="swaps", line=_line_of(text, '"swaps"'))
    for i, s in enumerate(swaps):
        if not (isinstance(s, list) and len(s) == 2 and all(_is_int(x) for x in s)):
            raise ParseError(path, f"entry {i} is not an [a, b] integer pair",
                             field="swaps", line=_line_of(text, '"swaps"'))
    if "length" in data and (not _is_int(data["length"]) or data["length"] != len(swaps)):
        raise ParseError(path, f"declares length {data['length']!r} but lists {len(swaps)} swaps",
                         field="length", line=_line_of(text, '"length"'))
    return SwapPlan.from_pairs(swaps)


def _number(text: str):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if value != value or value in (float("inf"), float("-inf")):
        raise argparse.ArgumentTypeError(f"{text!r} is not a finite number")
    return value


@dataclass(frozen=True)
class PlanRequest:
    topology: TopologySpec
    source: Permutation
    target: Permutation
    emit_states: bool = False
    cost: CostParams | None = None
    with_benefit: bool = False


def _graph(spec: TopologySpec) -> TaskSwapGraph:
    if spec.n in (1, 2):
        # no construction rules to enforce; the only possible edge is (1 2)
        edges = [Transposition(1, 2)] if spec.n == 2 else []
        return TaskSwapGraph(spec, edges)
    return build_graph(spec)


def _check_sizes(spec: TopologySpec, *perms: tuple[str, Permutation]):
    if spec.n < 1:
        raise TopologyError(f"n must be positive, got {spec.n}")
    for name, p in perms:
        if p.n != spec.n:
            raise SizeMismatchError(f"{name} has {p.n} entries but the topology has n={spec.n}")


def _compute_plan(g: TaskSwapGraph, source: Permutation, target: Permutation) -> SwapPlan:
    if g.n <= 2:
        return SwapPlan() if source == target else SwapPlan((Transposition(1, 2),))
    result = plan_swaps(g, source, target)
    verdict = check_plan(g, source, target, result)
    if not verdict.ok:
        raise PlannerInvariantError(f"planner produced an invalid plan: {verdict.to_dict()}")
    return result


def cmd_plan(req: PlanRequest) -> dict:
    _check_sizes(req.topology, ("source", req.source), ("target", req.target))
    g = _graph(req.topology)
    result = _compute_plan(g, req.source, req.target)
    out = result.to_dict(req.source if req.emit_states else None)
    if req.cost is not None:
        f = migration_cost(result, req.cost)
        out["cost_per_swap"] = req.cost.c
        out["migration_cost"] = f
        if req.with_benefit:
            out["benefit"] = benefit_report(req.cost, f)
    return out


def cmd_verify(spec: TopologySpec, source: Permutation, target: Permutation, plan: SwapPlan) -> dict:
    _check_sizes(spec, ("source", source), ("target", target))
    return check_plan(_graph(spec), source, target, plan).to_dict()


def cmd_oracle(spec: TopologySpec, source: Permutation, target: Permutation, cap: int = DEFAULT_CAP) -> dict:
    _check_sizes(spec, ("source", source), ("target", target))
    g = _graph(spec)
    if g.n <= 2:
        witness = _compute_plan(g, source, target)
        return {"distance": witness.length, "plan": witness.to_dict()}
    check_cap(g.n, cap)
    distance = bfs_distance(g.generators, source, target, cap)
    witness = shortest_plan(g.generators, source, target, cap)
    return {"distance": distance, "plan": witness.to_dict()}


def cmd_diameter(family: str, n: int, k: int | None = None, cap: int = DEFAULT_CAP) -> dict:
    return diameter_record(CayleyFamily(family, n, k), cap)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="taskswap", description="Plan adjacent task swaps on agent networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def endpoints(p, plan_file=False):
        p.add_argument("--topology", required=True, metavar="FILE", help="topology JSON")
        p.add_argument("--source", required=True, metavar="FILE", help="source assignment JSON")
        p.add_argument("--target", required=True, metavar="FILE", help="target assignment JSON")
        if plan_file:
            p.add_argument("--plan", required=True, metavar="FILE", help="plan JSON to check")

    def costs(p):
        p.add_argument("--cost-per-swap", type=_number, metavar="C", help="cost of one adjacent swap")
        p.add_argument("--h1", type=_number, metavar="X", help="cost of the source assignment")
        p.add_argument("--h2", type=_number, metavar="Y", help="cost of the target assignment")

    p = sub.add_parser("plan", help="compute a shortest swap plan")
    endpoints(p)
    p.add_argument("--emit-states", action="store_true", help="include every intermediate assignment")
    costs(p)

    p = sub.add_parser("verify", help="replay a plan and report the first failure")
    endpoints(p, plan_file=True)

    p = sub.add_parser("oracle", help="exact distance and a witness plan by breadth-first search")
    endpoints(p)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, metavar="N", help="largest n to search")

    p = sub.add_parser("diameter", help="diameter of a Cayley graph family")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int, metavar="N")
    p.add_argument("--k", type=int, metavar="K", help="bipartite index (GST only)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, metavar="N", help="largest n to search")
    p.add_argument("--survey", action="store_true", help="every family for n = 3..N")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("benefit", help="net benefit of a reassignment")
    p.add_argument("--topology", metavar="FILE")
    p.add_argument("--source", metavar="FILE")
    p.add_argument("--target", metavar="FILE")
    p.add_argument("--plan", metavar="FILE", help="use this plan's length instead of planning")
    costs(p)
    return parser


def _cost_params(args, need_benefit: bool) -> tuple[CostParams | None, bool]:
    given = args.h1 is not None or args.h2 is not None
    if given and (args.h1 is None or args.h2 is None):
        raise UsageError("--h1 and --h2 must be given together")
    if need_benefit and not given:
        raise UsageError("benefit needs --h1 and --h2")
    if args.cost_per_swap is None:
        if given or need_benefit:
            raise UsageError("a benefit needs --cost-per-swap")
        return None, False
    params = CostParams(args.cost_per_swap, args.h1 if given else 0, args.h2 if given else 0)
    return params, given


def _run(args) -> tuple[object, int]:
    cmd = args.command
    if cmd == "plan":
        cost, with_benefit = _cost_params(args, need_benefit=False)
        req = PlanRequest(
            read_topology(args.topology),
            read_assignment(args.source, "source"),
            read_assignment(args.target, "target"),
            emit_states=args.emit_states,
            cost=cost,
            with_benefit=with_benefit,
        )
        return cmd_plan(req), EXIT_OK
    if cmd == "verify":
        verdict = cmd_verify(
            read_topology(args.topology),
            read_assignment(args.source, "source"),
            read_assignment(args.target, "target"),
            read_plan(args.plan),
        )
        return verdict, EXIT_OK if verdict["verdict"] == "OK" else EXIT_REJECTED
    if cmd == "oracle":
        return cmd_oracle(
            read_topology(args.topology),
            read_assignment(args.source, "source"),
            read_assignment(args.target, "target"),
            args.cap,
        ), EXIT_OK
    if cmd == "diameter":
        if args.survey:
            top = args.n if args.n is not None else 6
            families = [args.family] if args.family else FAMILIES
            check_cap(top, args.cap)
            records = diameter_survey(range(3, top + 1), families, args.cap)
            text = survey_to_csv(records) if args.format == "csv" else survey_to_json(records) + "\n"
            return text, EXIT_OK
        if args.family is None or args.n is None:
            raise UsageError("diameter needs --family and --n (or --survey)")
        record = cmd_diameter(args.family, args.n, args.k, args.cap)
        if args.format == "csv":
            return survey_to_csv([record]), EXIT_OK
        return record, EXIT_OK
    # benefit
    cost, _ = _cost_params(args, need_benefit=True)
    if args.plan is not None:
        swaps = read_plan(args.plan)
    elif args.topology and args.source and args.target:
        swaps = _compute_plan_from_files(args)
    else:
        raise UsageError("benefit needs --plan, or --topology with --source and --target")
    f = migration_cost(swaps, cost)
    report = benefit_report(cost, f)
    report["plan_length"] = swaps.length
    report["cost_per_swap"] = cost.c
    return report, EXIT_OK


def _compute_plan_from_files(args) -> SwapPlan:
    spec = read_topology(args.topology)
    source = read_assignment(args.source, "source")
    target = read_assignment(args.target, "target")
    _check_sizes(spec, ("source", source), ("target", target))
    return _compute_plan(_graph(spec), source, target)


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        result, code = _run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except PlannerInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (TaskSwapError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        sys.stdout.write(json.dumps(result, indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
