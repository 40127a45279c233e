"""Command-line interface: ``angulata <command> [options]``.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 internal invariant
violation. Positions given with ``--at`` are 1-based.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import io
from .classical import d1_bridge_check
from .errors import AngulataError, InvariantViolation
from .index import IndexVector, apply_index_substitution, compute_index
from .model import ModelParams, enumerate_objects, fmt_arc, fmt_tuple
from .shear import shear_lamination, shear_vector
from .tilting import (
    ClusterTilting,
    complete_to_tilting,
    enumerate_tiltings,
    exchange_angles,
    exchange_graph,
    mutable_positions,
    mutate,
)
from .tropical import YSeed

DEFAULT_MAX_NODES = 10**6
DEFAULT_MAX_SECONDS = 60.0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def _paren(t) -> str:
    return f"({fmt_tuple(t)})"


def _params(args) -> ModelParams:
    if args.d is None or args.n is None:
        raise UsageError("--d and --n are required")
    return ModelParams(args.d, args.n)


def _tilting(args) -> ClusterTilting:
    if args.tilting:
        return io.load_tilting(args.tilting)
    return complete_to_tilting([], _params(args))


def _slot(args, t: ClusterTilting) -> int:
    if args.at is None:
        raise UsageError("--at is required")
    if not 1 <= args.at <= len(t):
        raise UsageError(f"--at must be between 1 and {len(t)}")
    return args.at - 1


class _Out:
    """Collects text lines and a JSON payload; prints one of them."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list[str] = []
        self.data: dict = {}

    def line(self, text: str = "") -> None:
        self.lines.append(text)

    def emit(self) -> None:
        if self.as_json:
            sys.stdout.write(io.dumps(self.data))
        elif self.lines:
            sys.stdout.write("\n".join(self.lines) + "\n")


# -- commands -----------------------------------------------------------


def cmd_objects(args, out: _Out) -> int:
    p = _params(args)
    objs = enumerate_objects(p)
    out.data = {"d": p.d, "n": p.n, "count": len(objs)}
    if args.count:
        out.line(str(len(objs)))
    else:
        out.data["objects"] = [list(o) for o in objs]
        out.lines.extend(_paren(o) for o in objs)
    return 0


def cmd_tiltings(args, out: _Out) -> int:
    p = _params(args)
    ts = enumerate_tiltings(p, max_nodes=args.max_nodes, max_seconds=args.max_seconds)
    out.data = {"d": p.d, "n": p.n, "count": len(ts)}
    if args.count:
        out.line(str(len(ts)))
    else:
        out.data["tiltings"] = [[list(s) for s in t.summands] for t in ts]
        out.lines.extend(str(t) for t in ts)
    return 0


def cmd_mutate(args, out: _Out) -> int:
    t = _tilting(args)
    pos = _slot(args, t)
    new_t, frame = mutate(t, pos)
    angles = exchange_angles(t, frame)
    out.data = {
        "at": pos + 1,
        "outgoing": list(frame.outgoing),
        "replacement": list(frame.incoming),
        "frame": list(frame.b),
        "left_middles": [[list(s) for s in term] for term in angles.left],
        "right_middles": [[list(s) for s in term] for term in angles.right],
        "tilting": io.tilting_to_dict(new_t),
    }
    out.line(f"outgoing: {_paren(frame.outgoing)}")
    out.line(f"replacement: {_paren(frame.incoming)}")
    out.line(f"frame: B={_paren(frame.b)}")
    for j, (left, right) in enumerate(zip(angles.left, angles.right), start=1):
        out.line(f"middle {j}: left {' + '.join(map(_paren, left)) or '0'}; right {' + '.join(map(_paren, right)) or '0'}")
    out.line(f"mutated: {new_t}")
    return 0


def cmd_index(args, out: _Out) -> int:
    t = _tilting(args)
    if not args.object:
        raise UsageError("--object is required")
    j = io.parse_tuple(args.object, t.params)
    v = compute_index(t, j)
    out.data = {"object": list(j), "index": v.to_dict()}
    out.line(f"basis: {t}")
    out.line(f"index of {_paren(j)}: {v}")
    return 0


def cmd_shear(args, out: _Out) -> int:
    t = _tilting(args)
    if bool(args.arc) == bool(args.lamination):
        raise UsageError("give exactly one of --arc and --lamination")
    if args.arc:
        a = io.parse_arc(args.arc, t.params)
        v = shear_vector(t, a)
        out.data = {"arc": [str(x) for x in a], "shear": v.to_dict()}
        out.line(f"basis: {t}")
        out.line(f"shear of ({fmt_arc(a)}): {v}")
        for pos in mutable_positions(t):
            out.line(f"  slot {pos + 1} {_paren(t.summands[pos])}: {v[pos]}")
    else:
        arcs = io.load_lamination(args.lamination, t.params)
        v = shear_lamination(t, arcs)
        out.data = {"lamination": io.lamination_to_dict(arcs)["arcs"], "shear": v.to_dict()}
        out.line(f"basis: {t}")
        out.line(f"shear of lamination ({len(arcs)} arcs): {v}")
    return 0


def cmd_graph(args, out: _Out) -> int:
    p = _params(args)
    seed = io.load_tilting(args.tilting) if args.tilting else None
    g = exchange_graph(p, seed=seed, max_nodes=args.max_nodes, max_seconds=args.max_seconds)
    edges = g.edges
    out.data = {"d": p.d, "n": p.n, "nodes": len(g.nodes), "edges": len(edges), "truncated": g.truncated}
    out.line(f"nodes: {len(g.nodes)}")
    out.line(f"edges: {len(edges)}")
    if g.truncated:
        out.line("truncated: budget exhausted before the graph was complete")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(g.to_dot())
        out.line(f"wrote {args.dot}")
    return 0


def cmd_trop(args, out: _Out) -> int:
    if args.bridge:
        t = _tilting(args)
        report = d1_bridge_check(t)
        out.data = {
            "tilting": io.tilting_to_dict(t),
            "checked": report.checked,
            "passed": report.passed,
            "failures": [list(map(str, f)) for f in report.failures],
        }
        out.line(f"bridge check on {t}: {report.checked} substitutions, {len(report.failures)} failures")
        for f in report.failures[:20]:
            out.line("  " + "; ".join(map(str, f)))
        if not report.passed:
            raise InvariantViolation("d=1 bridge check failed")
        return 0
    if not args.matrix or not args.vector:
        raise UsageError("trop needs --matrix and --vector (or --bridge)")
    b = io.load_matrix(args.matrix)
    v = io.parse_ints(args.vector)
    seed = YSeed(b, tuple((x,) for x in v))
    if args.at is None or not 1 <= args.at <= b.n:
        raise UsageError(f"--at must be between 1 and {b.n}")
    new = seed.mutate(args.at - 1)
    coeffs = [c[0] for c in new.coeffs]
    out.data = {"matrix": io.matrix_to_dict(new.matrix), "vector": coeffs}
    out.line("vector: " + ",".join(map(str, coeffs)))
    out.line("matrix:")
    out.lines.extend("  " + " ".join(f"{x:3d}" for x in row) for row in new.matrix.rows)
    return 0


def verify_worked_example() -> tuple[int, int, list[str]]:
    """Apply the substitution to every transcribed row; return (ok, total, diffs)."""
    data = io.load_worked_example()
    before = tuple(data["basis_before"])
    after = tuple(data["basis_after"])
    slot = data["slot"]
    sigma = IndexVector(before, tuple(data["index_sigma_incoming"]))
    estar = IndexVector(before, tuple(data["index_incoming"]))
    ok, diffs = 0, []
    for node in data["nodes"]:
        v = IndexVector(before, tuple(node["before"]))
        got = apply_index_substitution(v, slot, sigma, estar, after[slot])
        want = IndexVector(after, tuple(node["after"]))
        if got == want:
            ok += 1
        else:
            label = f"node {node['node']}" + (f" ({node['name']})" if "name" in node else "")
            diffs.append(f"{label}: expected {want}, got {got}")
    return ok, len(data["nodes"]), diffs


def cmd_verify_worked_example(args, out: _Out) -> int:
    ok, total, diffs = verify_worked_example()
    out.data = {"matched": ok, "total": total, "mismatches": diffs}
    out.lines.extend(diffs)
    out.line(f"{ok}/{total} vectors match")
    if ok != total:
        out.emit()
        raise InvariantViolation(f"{total - ok} fixture vectors differ")
    return 0


COMMANDS = {
    "objects": (cmd_objects, "list admissible tuples"),
    "tiltings": (cmd_tiltings, "enumerate cluster tilting objects"),
    "mutate": (cmd_mutate, "mutate a tilting object at one summand"),
    "index": (cmd_index, "index of an object over a tilting object"),
    "shear": (cmd_shear, "shear coordinates of an arc or lamination"),
    "graph": (cmd_graph, "exchange graph summary and DOT export"),
    "trop": (cmd_trop, "tropical Y-seed mutation, or the d=1 bridge check"),
    "verify-paper-example": (cmd_verify_worked_example, "check the bundled (3,3) mutation example"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--tilting", metavar="FILE", help="tilting object JSON {d, n, summands}")
    common.add_argument("--object", metavar="I0,I1,...")
    common.add_argument("--arc", metavar="A0,A1,...", help="rational coordinates such as 1/2,5/2")
    common.add_argument("--lamination", metavar="FILE", help='JSON {"arcs": [["1/2", ...], ...]}')
    common.add_argument("--matrix", metavar="FILE", help="JSON {n, rows}")
    common.add_argument("--vector", metavar="V0,V1,...")
    common.add_argument("--at", type=int, metavar="POS", help="1-based summand position")
    common.add_argument("--bridge", action="store_true")
    common.add_argument("--json", action="store_true")
    common.add_argument("--dot", metavar="FILE")
    common.add_argument("--count", action="store_true")
    common.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    common.add_argument("--max-seconds", type=float, default=DEFAULT_MAX_SECONDS)

    parser = _Parser(prog="angulata", description="Combinatorics of higher cluster categories.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_nodes <= 0 or args.max_seconds <= 0:
        parser.error("budgets must be positive")
    out = _Out(args.json)
    func = COMMANDS[args.command][0]
    try:
        code = func(args, out)
    except UsageError as exc:
        parser.error(str(exc))
    except OSError as exc:
        print(f"angulata: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"angulata: invariant violated: {exc}", file=sys.stderr)
        return exc.exit_code
    except AngulataError as exc:
        print(f"angulata: {exc}", file=sys.stderr)
        return exc.exit_code
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
