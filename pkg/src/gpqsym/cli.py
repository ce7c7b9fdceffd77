"""Command-line front end.

Exit codes: 0 success, 2 input or validation error, 3 budget exceeded,
4 two independent computations disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import building_sets as bs
from . import graphs as gr
from . import matroids as mt
from .errors import BudgetExceeded, OracleMismatch, ValidationError
from .invariants import antipode_face_expansion, fpolynomial
from .oracles import check_provider
from .qpoly import QPolynomial
from .qsym import QSymExpr, antipode, eval_q

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_MISMATCH = 0, 2, 3, 4

BUILTIN_GRAPHS = gr.BUILTIN_GRAPHS
BUILTIN_MATROIDS = {"m1": lambda: mt.builtin("m1"), "m2": lambda: mt.builtin("m2")}


@dataclass
class Subject:
    kind: str  # "graph" | "matroid" | "building-set"
    obj: object
    label: str
    uniform: Optional[tuple] = None

    @property
    def n(self) -> int:
        return self.obj.n


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None


def load_subject(args) -> Subject:
    if args.graph:
        return Subject("graph", gr.parse_graph(_read(args.graph)), args.graph)
    if args.matroid:
        return Subject("matroid", mt.parse_matroid(_read(args.matroid)), args.matroid)
    if args.building_set:
        return Subject("building-set", bs.parse_building_set(_read(args.building_set)), args.building_set)
    if args.uniform:
        n, r = args.uniform
        try:
            M = mt.uniform(n, r)
        except ValueError as exc:
            raise ValidationError(str(exc)) from None
        return Subject("matroid", M, f"U({n},{r})", uniform=(n, r))
    if args.builtin:
        name = args.builtin
        if name in BUILTIN_GRAPHS:
            return Subject("graph", BUILTIN_GRAPHS[name](), name)
        if name in BUILTIN_MATROIDS:
            return Subject("matroid", BUILTIN_MATROIDS[name](), name)
        known = ", ".join(sorted(BUILTIN_GRAPHS) + sorted(BUILTIN_MATROIDS))
        raise ValidationError(f"unknown builtin {name!r}; known: {known}")
    raise ValidationError("no input given")


def _check_size(subject: Subject, max_n: int) -> None:
    if subject.n > max_n:
        raise BudgetExceeded(f"ground size {subject.n} exceeds --max-n {max_n}")


def compute_fq(subject: Subject, orientation: str = "canonical") -> QSymExpr:
    if subject.kind == "graph":
        return gr.fq_graph(subject.obj)
    if subject.kind == "matroid":
        return mt.fq_matroid(subject.obj, orientation)
    return bs.fq_flag_sum(subject.obj)


def provider_for(subject: Subject, orientation: str = "canonical"):
    if subject.kind == "graph":
        return bs.building_set_provider(gr.graphical_building_set(subject.obj))
    if subject.kind == "matroid":
        return mt.matroid_provider(subject.obj, orientation)
    return bs.building_set_provider(subject.obj)


# ---------------------------------------------------------------------------
# rendering


def render_rows(f: QSymExpr) -> str:
    """One line per power of q, highest first, like a printed table."""
    lines = []
    rows = f.by_q_power()
    for k in sorted(rows, reverse=True):
        terms = " + ".join(
            (f"{c}*" if c != 1 else "") + "M(" + ",".join(map(str, a)) + ")"
            for a, c in ((a, rows[k][a].coefficient(0)) for a in rows[k])
        )
        lines.append(f"q^{k} | {terms}")
    return "\n".join(lines)


def render_terms(f: QSymExpr) -> str:
    """One line per composition with the full coefficient polynomial."""
    return "\n".join(
        "M(" + ",".join(map(str, a)) + "): " + c.to_str(explicit=True) for a, c in f.items()
    )


def result_json(kind: str, payload) -> str:
    return json.dumps({"kind": kind, "result": payload}, indent=2)


def load_result(text: str):
    """Inverse of the JSON output: returns the Python value of a result."""
    data = json.loads(text)
    kind, payload = data["kind"], data["result"]
    if kind in ("fq", "antipode"):
        return QSymExpr.from_json(payload)
    if kind == "fq0":
        return {tuple(t["composition"]): int(t["coeff"]) for t in payload}
    if kind == "fpoly":
        return {
            "fpoly": QPolynomial.from_json(payload["fpoly"]),
            "fvector": [int(x) for x in payload["fvector"]],
        }
    if kind == "dual-degrees":
        return {int(k): v for k, v in payload.items()}
    if kind == "collisions":
        return [gr.CollisionReport.from_json(r) for r in payload]
    if kind == "oracle":
        return payload
    raise ValueError(f"unknown result kind {kind!r}")


def fq0_json(d: dict) -> list:
    return [{"composition": list(a), "coeff": str(c)} for a, c in d.items()]


# ---------------------------------------------------------------------------
# commands


def cmd_fq(args) -> int:
    subject = load_subject(args)
    _check_size(subject, args.max_n)
    f = compute_fq(subject, args.orientation)
    if args.q0:
        d = eval_q(f, 0)
        if args.json:
            print(result_json("fq0", fq0_json(d)))
        else:
            print(" + ".join(f"{c}*M(" + ",".join(map(str, a)) + ")" for a, c in d.items()))
        return EXIT_OK
    if args.json:
        print(result_json("fq", f.to_json()))
    else:
        print(f"# F_q of {subject.label}")
        print(render_rows(f))
    return EXIT_OK


def cmd_fpoly(args) -> int:
    subject = load_subject(args)
    _check_size(subject, args.max_n)
    fp = fpolynomial(compute_fq(subject, args.orientation))
    fvec = list(fp.coeffs)
    if subject.uniform and 0 < subject.uniform[1] < subject.uniform[0]:
        trinomial = mt.fvector_uniform(*subject.uniform)
        if trinomial != fvec:
            raise OracleMismatch(f"flag-sum f-vector {fvec} != trinomial {trinomial}")
    if args.json:
        print(result_json("fpoly", {"fpoly": fp.to_json(), "fvector": [str(x) for x in fvec]}))
    else:
        print(fp.to_str())
        print("f-vector: " + " ".join(map(str, fvec)))
    return EXIT_OK


def cmd_antipode(args) -> int:
    subject = load_subject(args)
    _check_size(subject, args.max_n)
    f = compute_fq(subject, args.orientation)
    s = antipode(f)
    if args.check:
        rhs = antipode_face_expansion(provider_for(subject, args.orientation))
        if rhs != s:
            raise OracleMismatch("antipode of F_q disagrees with the face expansion")
    if args.json:
        print(result_json("antipode", s.to_json()))
    else:
        print(f"# S(F_q) of {subject.label}")
        print(render_terms(s))
    return EXIT_OK


def cmd_dual_degrees(args) -> int:
    subject = load_subject(args)
    _check_size(subject, args.max_n)
    if subject.kind == "graph":
        hist = gr.dual_skeleton_degrees(subject.obj)
    elif subject.kind == "building-set":
        hist = bs.skeleton_degree_histogram(subject.obj)
    else:
        raise ValidationError("dual-degrees needs a graph or a building set")
    if args.json:
        print(result_json("dual-degrees", {str(k): v for k, v in hist.items()}))
    else:
        print("d | " + " ".join(f"{k:>3}" for k in hist))
        print("n | " + " ".join(f"{v:>3}" for v in hist.values()))
    return EXIT_OK


def cmd_collisions(args) -> int:
    if args.n > args.max_n or args.n > 7:
        raise BudgetExceeded(f"collision search on {args.n} vertices is over budget")
    universes = [True, False] if args.universe == "both" else [args.universe == "connected"]
    reports = [gr.collision_search(args.n, connected_only=c, mode=args.mode) for c in universes]
    if args.json:
        print(result_json("collisions", [r.to_json() for r in reports]))
    else:
        for r in reports:
            print(f"# n={r.n} universe={r.universe} invariant={'F' if r.mode == 'q0' else 'F_q'}: "
                  f"{r.num_graphs} classes, {r.num_pairs} colliding pairs")
            for cls in r.classes:
                print("  " + "  ==  ".join(
                    "{" + ",".join(f"{u}{v}" for u, v in sorted(G.edges)) + "}" for G in cls))
    return EXIT_OK


def cmd_oracle(args) -> int:
    subject = load_subject(args)
    m = args.m or subject.n
    if subject.n > args.max_n:
        raise BudgetExceeded(f"ground size {subject.n} exceeds --max-n {args.max_n}")
    f = compute_fq(subject, args.orientation)
    report = check_provider(provider_for(subject, args.orientation), f, m, budget=args.budget)
    print(json.dumps({"kind": "oracle", "result": report}, indent=2) if args.json
          else ("match" if report["match"] else json.dumps(report, indent=2)))
    return EXIT_OK if report["match"] else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# parser


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="FILE", help="graph file: 'n' then 'u v' per edge")
    src.add_argument("--matroid", metavar="FILE", help="matroid file: 'n r' then one base per line")
    src.add_argument("--building-set", metavar="FILE", help="building-set file: 'n' then one member per line")
    src.add_argument("--uniform", nargs=2, type=int, metavar=("N", "R"), help="uniform matroid U(N,R)")
    src.add_argument("--builtin", metavar="NAME",
                     help="named input: " + ", ".join(sorted(BUILTIN_GRAPHS) + sorted(BUILTIN_MATROIDS)))
    p.add_argument("--orientation", choices=mt.ORIENTATIONS, default="canonical",
                   help="flag orientation for matroids (default: canonical)")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--max-n", type=int, default=9, help="largest ground size to attempt (default 9)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gpqsym", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fq", help="weighted quasisymmetric enumerator F_q")
    _add_input(p)
    _add_common(p)
    p.add_argument("--q0", action="store_true", help="only the q=0 specialization F")
    p.set_defaults(func=cmd_fq)

    p = sub.add_parser("fpoly", help="f-polynomial from F_q")
    _add_input(p)
    _add_common(p)
    p.set_defaults(func=cmd_fpoly)

    p = sub.add_parser("antipode", help="antipode of F_q")
    _add_input(p)
    _add_common(p)
    p.add_argument("--check", action="store_true", help="compare with the face f-polynomial expansion")
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("dual-degrees", help="vertex degrees of the dual 1-skeleton")
    _add_input(p)
    _add_common(p)
    p.set_defaults(func=cmd_dual_degrees)

    p = sub.add_parser("collisions", help="graphs sharing the same invariant")
    _add_common(p)
    p.add_argument("--n", type=int, default=6, help="number of vertices (<= 7)")
    p.add_argument("--universe", choices=("connected", "all", "both"), default="both")
    p.add_argument("--mode", choices=("q0", "fq"), default="q0", help="compare F (q0) or F_q (fq)")
    p.set_defaults(func=cmd_collisions)

    p = sub.add_parser("oracle", help="lattice-point enumeration versus the flag sum")
    _add_input(p)
    _add_common(p)
    p.add_argument("--m", type=int, default=None, help="number of variables (default n)")
    p.add_argument("--budget", type=int, default=10**6, help="maximum m^n")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OracleMismatch as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
