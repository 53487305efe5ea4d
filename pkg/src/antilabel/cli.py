"""Command-line surface: generate graphs, compute labeling numbers, emit and
verify labelings, and run conjecture sweeps with persisted JSONL records.

Exit codes: 0 success, 2 parse/usage error, 3 infeasible claim or failed
verification, 4 budget exceeded, 5 theorem violation detected.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .antik import (
    Labeling,
    anti_k_number,
    construct_anti_k_labeling,
    evaluate_labeling,
    parse_labeling,
    serialize_labeling,
)
from .budget import DEFAULT_NODE_BUDGET, BudgetExceededError
from .coloring import chromatic_number
from .graphs import FamilySpec, Graph, ParseError, bipartition, generate, parse_graph, serialize_graph
from .l21 import anti_l21_lower_bound, anti_l21_number, lambda_number
from .nohole import (
    complement_hamiltonian_labeling,
    cycle_labeling,
    exact_nohole_number,
    grid_labeling,
    hypercube_labeling,
    nohole_upper_bound,
    nohole_upper_bound_terms,
    path_labeling,
    tree_labeling,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3
EXIT_BUDGET = 4
EXIT_VIOLATION = 5

SWEEP_DEFAULT_BUDGET = 5_000_000
_SWEEP_DEFAULT_SIZES = {"tree-15": (2, 10), "grid-17": (4, 12), "cube-21": (2, 3)}


def _emit(report: dict) -> None:
    print(json.dumps(report))


def _load_graph(args) -> tuple[Graph, str]:
    if getattr(args, "family", None) and getattr(args, "input", None):
        raise ValueError("give either --family or --input, not both")
    if getattr(args, "family", None):
        spec = FamilySpec.parse(args.family)
        return generate(spec), str(spec)
    if getattr(args, "input", None):
        text = Path(args.input).read_text()
        return parse_graph(text), args.input
    raise ValueError("a graph source is required: --family or --input")


def _bound_entry(value: int, source: str) -> dict:
    return {"value": value, "source": source}


def _write_witness(args, witness: Labeling | None) -> str | None:
    if witness is None or not getattr(args, "output", None):
        return None
    Path(args.output).write_text(serialize_labeling(witness))
    return args.output


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    g, _ = _load_graph(args)
    text = serialize_graph(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------


def _require_k(args) -> int:
    if args.k is None:
        raise ValueError(f"--quantity {args.quantity} requires --k")
    return args.k


def cmd_compute(args) -> int:
    g, instance = _load_graph(args)
    start = time.perf_counter()
    budget = args.budget_nodes
    lower: list[dict] = []
    upper: list[dict] = []
    witness: Labeling | None = None
    value: int | str | None = None
    status = "ok"
    exit_code = EXIT_OK

    try:
        if args.quantity == "chi":
            chi, coloring = chromatic_number(g, budget=budget)
            value = chi
            witness = Labeling(k=chi, labels=tuple(c + 1 for c in coloring.colors))
            lower.append(_bound_entry(chi, "exact-branch-and-bound"))
            upper.append(_bound_entry(chi, "exact-branch-and-bound"))
        elif args.quantity == "mck":
            k = _require_k(args)
            result = anti_k_number(g, k, budget=budget)
            if result is None:
                value = "unconstrained"
            else:
                value = result
                lower.append(_bound_entry(result, "coloring-formula"))
                upper.append(_bound_entry(result, "coloring-formula"))
                if result > 0:
                    witness = construct_anti_k_labeling(g, k, budget=budget)
        elif args.quantity == "nohole":
            if g.m == 0:
                value = "unconstrained"
            else:
                if g.n >= 2 and g.is_connected():
                    upper.extend(
                        _bound_entry(b.value, b.source)
                        for b in nohole_upper_bound_terms(g, budget=budget)
                    )
                lower.append(_bound_entry(1, "any-bijection"))
                exact, witness = exact_nohole_number(g, budget=budget)
                value = exact
                lower.append(_bound_entry(exact, "exact-search"))
        elif args.quantity == "l21":
            value = lambda_number(g, budget=budget)
            lower.append(_bound_entry(value, "exact-search"))
            upper.append(_bound_entry(value, "exact-search"))
        elif args.quantity == "anti-l21":
            k = _require_k(args)
            if g.m == 0:
                value = "unconstrained"
            else:
                bounds = anti_l21_lower_bound(g, k, budget=budget)
                if bounds.generic is not None:
                    lower.append(_bound_entry(bounds.generic, "degree-cap-formula"))
                if bounds.via_lambda is not None:
                    lower.append(_bound_entry(bounds.via_lambda, "lambda-number-division"))
                upper.append(_bound_entry(2 * ((k - 1) // 2), "label-range"))
                value = anti_l21_number(g, k, budget=budget)
        else:  # pragma: no cover - argparse restricts choices
            raise ValueError(f"unknown quantity {args.quantity}")
    except BudgetExceededError as err:
        status = "budget-exceeded"
        exit_code = EXIT_BUDGET
        value = None
        if err.lower is not None:
            lower.append(_bound_entry(err.lower, "search-progress"))
        if err.upper is not None:
            upper.append(_bound_entry(err.upper, "search-progress"))
        witness = err.witness

    witness_path = _write_witness(args, witness)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "compute",
        "instance": instance,
        "quantity": args.quantity,
        "k": args.k,
        "value": value,
        "lower_bounds": lower,
        "upper_bounds": upper,
        "witness_path": witness_path,
        "runtime_ms": int((time.perf_counter() - start) * 1000),
        "status": status,
    }
    _emit(report)
    return exit_code


# ---------------------------------------------------------------------------
# label
# ---------------------------------------------------------------------------

_TREE_FAMILIES = {"random-tree", "star", "pendant-star", "path"}


def _infer_method(args, g: Graph) -> str:
    if args.method:
        return args.method
    if args.family:
        kind = FamilySpec.parse(args.family).kind
        if kind in {"path", "cycle", "grid", "hypercube"}:
            return kind
        if kind in _TREE_FAMILIES:
            return "tree"
    raise ValueError("cannot infer a construction; pass --method")


def cmd_label(args) -> int:
    g, instance = _load_graph(args)
    start = time.perf_counter()
    method = _infer_method(args, g)
    budget = args.budget_nodes
    status = "ok"
    if method in {"path", "cycle", "grid", "hypercube"}:
        if not args.family or FamilySpec.parse(args.family).kind != method:
            raise ValueError(f"--method {method} needs a matching --family {method}:...")
    if method == "path":
        spec = FamilySpec.parse(args.family)
        labeling = path_labeling(*spec.params)
    elif method == "cycle":
        spec = FamilySpec.parse(args.family)
        labeling = cycle_labeling(*spec.params)
    elif method == "grid":
        spec = FamilySpec.parse(args.family)
        labeling = grid_labeling(*spec.params)
    elif method == "hypercube":
        spec = FamilySpec.parse(args.family)
        labeling = hypercube_labeling(*spec.params)
    elif method == "tree":
        labeling = tree_labeling(g)
    elif method == "complement-ham":
        found = complement_hamiltonian_labeling(g, budget=budget)
        if found is None:
            _emit(
                {
                    "schema_version": SCHEMA_VERSION,
                    "command": "label",
                    "instance": instance,
                    "method": method,
                    "status": "infeasible",
                    "detail": "complement has no spanning path; best no-hole gap is 1",
                }
            )
            return EXIT_INFEASIBLE
        labeling = found
    elif method == "anti-k":
        k = _require_k(args)
        labeling = construct_anti_k_labeling(g, k, budget=budget)
    elif method == "identity":
        labeling = Labeling(k=g.n, labels=tuple(range(1, g.n + 1)), no_hole=True)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown method {method}")

    report_eval = evaluate_labeling(g, labeling)
    text = serialize_labeling(labeling)
    if args.output:
        Path(args.output).write_text(text)
        _emit(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "label",
                "instance": instance,
                "method": method,
                "k": labeling.k,
                "no_hole": labeling.no_hole,
                "achieved_gap": report_eval.min_gap,
                "witness_path": args.output,
                "runtime_ms": int((time.perf_counter() - start) * 1000),
                "status": status,
            }
        )
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    g, instance = _load_graph(args)
    start = time.perf_counter()
    labeling = parse_labeling(Path(args.labeling).read_text())
    if labeling.n != g.n:
        raise ParseError(
            0, f"labeling covers {labeling.n} vertices but the graph has {g.n}"
        )
    report = evaluate_labeling(g, labeling, strict=False)
    gap_ok = report.min_gap is None or report.min_gap >= args.claim
    nohole_ok = report.no_hole_satisfied if args.no_hole else True
    passed = report.valid and nohole_ok and gap_ok
    _emit(
        {
            "schema_version": SCHEMA_VERSION,
            "command": "verify",
            "instance": instance,
            "claimed_gap": args.claim,
            "no_hole_claimed": bool(args.no_hole),
            "measured_gap": "unconstrained" if report.min_gap is None else report.min_gap,
            "witness_edge": list(report.witness_edge) if report.witness_edge else None,
            "valid": report.valid,
            "no_hole_satisfied": report.no_hole_satisfied,
            "pass": passed,
            "runtime_ms": int((time.perf_counter() - start) * 1000),
            "status": "pass" if passed else "fail",
        }
    )
    return EXIT_OK if passed else EXIT_INFEASIBLE


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------


def _parse_sizes(text: str | None, default: tuple[int, int]) -> tuple[int, int]:
    if not text:
        return default
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError("--sizes must look like <lo>:<hi>")
    lo_i, hi_i = int(lo), int(hi)
    if lo_i > hi_i:
        raise ValueError("--sizes range is empty")
    return lo_i, hi_i


def _tree_seed(base: int, n: int, index: int) -> int:
    # Stable derivation so sweeps are reproducible and resumable.
    return base * 1_000_003 + n * 1_009 + index


def _sweep_plan(args) -> list[dict]:
    lo, hi = _parse_sizes(args.sizes, _SWEEP_DEFAULT_SIZES[args.conjecture])
    plan: list[dict] = []
    if args.conjecture == "tree-15":
        for n in range(lo, hi + 1):
            for i in range(args.per_size):
                seed = _tree_seed(args.seed, n, i)
                plan.append({"spec": FamilySpec("random-tree", (n, seed))})
    elif args.conjecture == "grid-17":
        for m in range(2, hi + 1):
            for n in range(m, hi + 1):
                if lo <= m * n <= hi:
                    plan.append(
                        {"spec": FamilySpec("grid", (m, n)), "conjectured": (m * n - m) // 2}
                    )
    else:  # cube-21
        for d in range(max(lo, 2), hi + 1):
            plan.append(
                {"spec": FamilySpec("hypercube", (d,)), "conjectured": 1 << (d - 2)}
            )
    return plan


def _sweep_record(args, item: dict) -> dict:
    spec: FamilySpec = item["spec"]
    start = time.perf_counter()
    g = generate(spec)
    if spec.kind == "random-tree":
        sides = bipartition(g)
        conjectured = min(sides.sizes) if g.n > 1 else 1
        construction = tree_labeling(g)
    elif spec.kind == "grid":
        conjectured = item["conjectured"]
        construction = grid_labeling(*spec.params)
    else:
        conjectured = item["conjectured"]
        construction = hypercube_labeling(*spec.params)

    constructed = evaluate_labeling(g, construction).min_gap
    record = {
        "schema_version": SCHEMA_VERSION,
        "conjecture": args.conjecture,
        "instance": str(spec),
        "seed": args.seed,
        "conjectured": conjectured,
        "bound_constructed": constructed,
        "bound_upper": None,
        "exact": None,
        "verdict": None,
        "runtime_ms": 0,
    }

    if g.m == 0:  # single-vertex tree: nothing to check
        record.update(bound_upper=0, exact=0, verdict="equality", conjectured=0)
        record["bound_constructed"] = 0
        record["runtime_ms"] = int((time.perf_counter() - start) * 1000)
        return record

    upper = nohole_upper_bound(g, budget=args.budget_nodes)
    record["bound_upper"] = upper
    if constructed < conjectured or conjectured > upper:
        record["verdict"] = "violation"
        record["runtime_ms"] = int((time.perf_counter() - start) * 1000)
        return record

    try:
        exact, _ = exact_nohole_number(
            g,
            budget=args.budget_nodes,
            lower_hint=constructed,
            hint_witness=construction,
        )
        record["exact"] = exact
        if exact < conjectured or exact > upper:
            record["verdict"] = "violation"
        elif exact == conjectured:
            record["verdict"] = "equality"
        else:
            record["verdict"] = "gap"
    except BudgetExceededError:
        record["exact"] = "skipped(budget)"
        record["verdict"] = "skipped"
    record["runtime_ms"] = int((time.perf_counter() - start) * 1000)
    return record


def cmd_sweep(args) -> int:
    out_path = Path(args.output)
    existing: set[str] = set()
    if out_path.exists():
        for line in out_path.read_text().splitlines():
            line = line.strip()
            if line:
                existing.add(json.loads(line)["instance"])

    plan = _sweep_plan(args)
    counts = {"equality": 0, "gap": 0, "violation": 0, "skipped": 0}
    written = 0
    skipped_existing = 0
    aborted = False
    with out_path.open("a") as sink:
        for item in plan:
            if str(item["spec"]) in existing:
                skipped_existing += 1
                continue
            record = _sweep_record(args, item)
            sink.write(json.dumps(record) + "\n")
            sink.flush()
            written += 1
            counts[record["verdict"]] += 1
            if record["verdict"] == "violation" and not args.keep_going:
                aborted = True
                break

    _emit(
        {
            "schema_version": SCHEMA_VERSION,
            "command": "sweep",
            "conjecture": args.conjecture,
            "output": str(out_path),
            "counts": counts,
            "records_written": written,
            "records_skipped_existing": skipped_existing,
            "aborted": aborted,
            "status": "violation" if counts["violation"] else "ok",
        }
    )
    return EXIT_VIOLATION if counts["violation"] else EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help="family spec such as path:7, grid:3,4, multipartite:2,3")
    p.add_argument("--input", help="edge-list file to read the graph from")


def _add_budget(p: argparse.ArgumentParser, default: int) -> None:
    p.add_argument(
        "--budget-nodes",
        type=int,
        default=default,
        help=f"node-expansion budget for exact searches (default {default})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antilabel",
        description="Anti-k-labeling toolkit: numbers, labelings, verification, sweeps.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_gen = sub.add_parser("gen", help="generate a family graph as an edge list")
    _add_graph_source(p_gen)
    p_gen.add_argument("--output", help="file to write (default stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_compute = sub.add_parser("compute", help="compute a labeling number with bounds")
    _add_graph_source(p_compute)
    p_compute.add_argument(
        "--quantity",
        required=True,
        choices=["chi", "mck", "nohole", "l21", "anti-l21"],
    )
    p_compute.add_argument("--k", type=int, help="label ceiling for mck / anti-l21")
    p_compute.add_argument("--output", help="write the witness labeling here")
    _add_budget(p_compute, DEFAULT_NODE_BUDGET)
    p_compute.set_defaults(func=cmd_compute)

    p_label = sub.add_parser("label", help="emit a constructed labeling")
    _add_graph_source(p_label)
    p_label.add_argument(
        "--method",
        choices=[
            "path",
            "cycle",
            "grid",
            "hypercube",
            "tree",
            "complement-ham",
            "anti-k",
            "identity",
        ],
        help="construction to run (inferred from --family when possible)",
    )
    p_label.add_argument("--k", type=int, help="label ceiling for --method anti-k")
    p_label.add_argument("--output", help="labeling file to write (default stdout)")
    _add_budget(p_label, DEFAULT_NODE_BUDGET)
    p_label.set_defaults(func=cmd_label)

    p_verify = sub.add_parser("verify", help="check a labeling file against a claim")
    _add_graph_source(p_verify)
    p_verify.add_argument("--labeling", required=True, help="labeling file to verify")
    p_verify.add_argument("--claim", type=int, required=True, help="claimed minimum gap")
    p_verify.add_argument("--no-hole", action="store_true", help="also require no holes")
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="check a conjecture over instance ranges")
    p_sweep.add_argument(
        "--conjecture", required=True, choices=["tree-15", "grid-17", "cube-21"]
    )
    p_sweep.add_argument("--sizes", help="inclusive size range lo:hi (per-conjecture default)")
    p_sweep.add_argument("--per-size", type=int, default=50, help="random trees per size")
    p_sweep.add_argument("--seed", type=int, default=0, help="base seed for random instances")
    p_sweep.add_argument("--output", required=True, help="JSONL record sink (appended)")
    p_sweep.add_argument(
        "--keep-going",
        action="store_true",
        help="record violations instead of aborting on the first one",
    )
    _add_budget(p_sweep, SWEEP_DEFAULT_BUDGET)
    p_sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as err:
        print(json.dumps({"status": "parse-error", "detail": str(err)}), file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as err:
        print(json.dumps({"status": "budget-exceeded", "detail": str(err)}), file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as err:
        print(json.dumps({"status": "error", "detail": str(err)}), file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
