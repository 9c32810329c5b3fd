"""Command-line front end.

Exit codes: 0 success or valid, 1 malformed input or bad arguments, 2 a
well-formed input with a negative verdict (not a quandle, not a group, not
Alexander).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from pathlib import Path

from . import io
from .errors import AxiomError, MalformedTableError, NotAnAutomorphism, SizeCapExceeded
from .group import (
    automorphism_group,
    cyclic_group,
    direct_product,
    validate_abelian_group,
    validate_group,
)
from .obstruction import explain_trace, obstruction_check
from .quandle import (
    ENUMERATION_CAP,
    conj_quandle,
    dihedral_quandle,
    enumerate_quandles,
    is_abelian,
    is_left_distributive,
    quandle_violation,
    trivial_quandle,
    validate_quandle,
)
from .search import SUCCESS, alexander_presentations, alexander_quandle

OK, BAD_INPUT, NEGATIVE = 0, 1, 2


class CommandError(Exception):
    def __init__(self, message: str, code: int = BAD_INPUT):
        super().__init__(message)
        self.code = code


def _emit(args, text: str = "", doc=None) -> None:
    if args.json:
        if doc is not None:
            sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    elif not args.quiet and text:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _load_quandle(args, path):
    table = io.read_matrix(path)
    if args.max_size is not None and len(table) > args.max_size:
        raise CommandError(f"order {len(table)} exceeds --max-size {args.max_size}")
    try:
        return validate_quandle(table)
    except AxiomError as exc:
        raise CommandError(f"not a quandle: {exc}", NEGATIVE) from None


def _load_group(spec: str, abelian: bool = True):
    """A group file path, or ``Zn`` shorthand for the cyclic group of order n."""
    m = re.fullmatch(r"Z(\d+)", spec)
    if m and not Path(spec).exists():
        return cyclic_group(int(m.group(1)))
    table = io.read_matrix(spec)
    try:
        return validate_abelian_group(table) if abelian else validate_group(table)
    except AxiomError as exc:
        raise CommandError(f"{spec}: not a valid group table ({exc.axiom}): {exc}", NEGATIVE) from None


def _write_output(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    elif not args.quiet:
        sys.stdout.write(text)


def _obstruction_doc(verdict, with_steps: bool) -> dict:
    doc = {
        "status": verdict.status,
        "e0": [list(c) for c in verdict.trace.e0],
        "e1": [list(c) for c in verdict.trace.e1],
    }
    if with_steps:
        doc["steps"] = [
            {"rule": s.rule, "premise": list(s.premise), "partition": s.partition, "pair": list(s.pair)}
            for s in verdict.trace.steps
        ]
    return doc


def _analyse(args, q):
    clock = time.perf_counter
    t0 = clock()
    abelian = is_abelian(q)
    left = is_left_distributive(q)
    t1 = clock()
    verdict = obstruction_check(q)
    t2 = clock()
    outcome = alexander_presentations(q)
    t3 = clock()
    doc = {
        "source": q.tolist(),
        "n": q.n,
        "status": outcome.status,
        "abelian": abelian.holds,
        "left_distributive": left.holds,
        "obstruction": _obstruction_doc(verdict, args.trace),
        "presentations": [
            {"cayley": p.cayley.tolist(), "phi": list(p.phi)} for p in outcome.presentations
        ],
        "witnesses": {
            "abelian": list(abelian.witness) if abelian.witness else None,
            "left_distributive": list(left.witness) if left.witness else None,
            "search": outcome.diagnostics,
        },
    }
    if args.timing:
        doc["timing"] = {"tests": t1 - t0, "obstruction": t2 - t1, "search": t3 - t2}
    return doc, verdict


def cmd_validate(args) -> int:
    table = io.read_matrix(args.file)
    problem = quandle_violation(table)
    if problem is None:
        doc = {"status": "valid", "n": len(table), "axiom": None, "witnesses": None}
        _emit(args, f"valid quandle of order {len(table)}", doc)
        return OK
    doc = {
        "status": "invalid",
        "n": len(table),
        "axiom": problem.axiom,
        "witnesses": list(problem.witness),
        "message": problem.message,
    }
    _emit(args, f"not a quandle: {problem.message} (witness {problem.witness})", doc)
    return NEGATIVE


def cmd_classify(args) -> int:
    q = _load_quandle(args, args.file)
    doc, verdict = _analyse(args, q)
    count = len(doc["presentations"])
    lines = [
        f"order: {q.n}",
        f"abelian: {_yes(doc['abelian'])}",
        f"left-distributive: {_yes(doc['left_distributive'])}",
        f"obstruction: {verdict.status}",
    ]
    if args.trace:
        lines += ["  " + line for line in explain_trace(verdict.trace).splitlines()]
    lines.append(f"Alexander: {_yes(count > 0)} ({count} presentation{'s' if count != 1 else ''})")
    if doc["witnesses"]["search"] and count == 0:
        lines.append(f"  search: {doc['status']}: {doc['witnesses']['search']}")
    if args.timing:
        lines.append("timing: " + ", ".join(f"{k} {v * 1e3:.3f} ms" for k, v in doc["timing"].items()))
    _emit(args, "\n".join(lines), doc)
    return OK if doc["status"] == SUCCESS else NEGATIVE


def cmd_presentations(args) -> int:
    q = _load_quandle(args, args.file)
    doc, verdict = _analyse(args, q)
    pres = doc["presentations"]
    parts = [f"status: {doc['status']}", f"presentations: {len(pres)}"]
    for k, p in enumerate(pres, start=1):
        parts.append("")
        parts.append(f"presentation {k}")
        parts.append("cayley:")
        parts.append(io.format_matrix(p["cayley"]).rstrip("\n"))
        parts.append("phi: " + io.format_phi(p["phi"]).rstrip("\n"))
    _emit(args, "\n".join(parts), doc)
    return OK if doc["status"] == SUCCESS else NEGATIVE


def cmd_generate(args) -> int:
    kind = args.kind
    params = args.params
    try:
        if kind in ("trivial", "dihedral"):
            if len(params) != 1 or not params[0].isdigit() or int(params[0]) < 1:
                raise CommandError(f"generate {kind} takes one positive integer")
            n = int(params[0])
            q = trivial_quandle(n) if kind == "trivial" else dihedral_quandle(n)
        elif kind == "conj":
            if len(params) != 1:
                raise CommandError("generate conj takes one group file")
            q = conj_quandle(_load_group(params[0], abelian=False))
        else:
            if len(params) != 2:
                raise CommandError("generate alexander takes a Cayley file and a phi file")
            c = _load_group(params[0], abelian=True)
            phi = io.read_phi(params[1], c.n)
            q = alexander_quandle(c, phi)
    except NotAnAutomorphism as exc:
        raise CommandError(str(exc), NEGATIVE) from None
    _write_output(args, io.format_matrix(q))
    return OK


def cmd_group(args) -> int:
    sub, params = args.sub, args.params
    if sub == "cyclic":
        if len(params) != 1 or not params[0].isdigit() or int(params[0]) < 1:
            raise CommandError("group cyclic takes one positive integer")
        _write_output(args, io.format_matrix(cyclic_group(int(params[0]))))
        return OK
    if sub == "product":
        if len(params) != 2:
            raise CommandError("group product takes two group files")
        a, b = (_load_group(p, abelian=False) for p in params)
        _write_output(args, io.format_matrix(direct_product(a, b)))
        return OK
    if len(params) != 1:
        raise CommandError(f"group {sub} takes one group file")
    if sub == "validate":
        table = io.read_matrix(params[0])
        try:
            c = validate_group(table) if args.nonabelian else validate_abelian_group(table)
        except AxiomError as exc:
            doc = {"status": "invalid", "axiom": exc.axiom, "witnesses": list(exc.witness), "message": str(exc)}
            _emit(args, f"not a valid group table ({exc.axiom}): {exc}", doc)
            return NEGATIVE
        kind = "abelian group" if c.is_abelian else "group"
        _emit(args, f"valid {kind} of order {c.n}", {"status": "valid", "n": c.n, "abelian": c.is_abelian})
        return OK
    c = _load_group(params[0], abelian=True)
    cap = args.max_size if args.max_size is not None else 10
    auts = automorphism_group(c, cap=cap)
    text = "".join(io.format_phi(phi) for phi in auts)
    if args.json:
        _emit(args, doc={"n": c.n, "count": len(auts), "automorphisms": [list(a) for a in auts]})
    else:
        _write_output(args, text)
    return OK


def cmd_enumerate(args) -> int:
    cap = ENUMERATION_CAP if args.max_size is None else min(args.max_size, ENUMERATION_CAP)
    n = args.n
    if n < 1:
        raise CommandError("order must be positive")
    records = []
    counts = {"total": 0, "abelian": 0, "alexander": 0}
    chunks = []
    for q in enumerate_quandles(n, cap=cap):
        ab = bool(is_abelian(q))
        alex = alexander_presentations(q).status == SUCCESS if ab else False
        counts["total"] += 1
        counts["abelian"] += ab
        counts["alexander"] += alex
        records.append({"table": q.tolist(), "abelian": ab, "alexander": alex})
        chunks.append(f"# quandle {counts['total']} abelian={_yes(ab)} alexander={_yes(alex)}\n" + io.format_matrix(q))
    chunks.append(
        f"# counts: total={counts['total']} abelian={counts['abelian']} alexander={counts['alexander']}\n"
    )
    if args.json:
        _emit(args, doc={"n": n, "quandles": records, "counts": counts})
    elif not args.quiet:
        sys.stdout.write("\n".join(chunks))
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--trace", action="store_true", help="include the obstruction derivation")
    common.add_argument("--max-size", type=int, default=None, metavar="N", help="refuse orders above N")
    common.add_argument("--quiet", action="store_true", help="suppress text output; rely on the exit code")
    common.add_argument("--timing", action="store_true", help="report wall-clock timings")

    parser = argparse.ArgumentParser(prog="alexq", description="Alexander presentations of finite quandles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the quandle axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", parents=[common], help="abelian / left-distributive / obstruction / Alexander")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("presentations", parents=[common], help="list every Alexander presentation")
    p.add_argument("file")
    p.set_defaults(func=cmd_presentations)

    p = sub.add_parser("generate", parents=[common], help="write a quandle matrix")
    p.add_argument("kind", choices=["trivial", "dihedral", "conj", "alexander"])
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("group", parents=[common], help="Cayley matrix utilities")
    p.add_argument("sub", choices=["cyclic", "product", "auts", "validate"])
    p.add_argument("params", nargs="*", help="an integer, or group files (Zn names a cyclic group)")
    p.add_argument("-o", "--out", help="output path (default stdout)")
    p.add_argument("--nonabelian", action="store_true", help="validate: accept non-commutative groups")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("enumerate", parents=[common], help=f"all labeled quandles of order n <= {ENUMERATION_CAP}")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"alexq: {exc}", file=sys.stderr)
        return exc.code
    except (io.MatrixFileError, MalformedTableError, SizeCapExceeded, OSError) as exc:
        print(f"alexq: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
