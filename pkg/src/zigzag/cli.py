"""Command line front end.

Exit codes: 0 success, 1 a checked property fails, 2 parse or usage error,
3 precondition or resource error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import paths as zpaths
from . import semigroup as sg
from .category import check_category_axioms, check_left_cancellative, check_singly_aligned, load_cat
from .errors import AxiomError, InputError, ParseError, SizeCapError, ZigzagError
from .formats import load_semigroup
from .graphs import graph_inverse_semigroup, load_graph
from .morita import im_construction
from .render import category_dot, eggbox_dot, eggbox_text
from .zm import zm

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3

PROPS = ("z1", "z2", "z3", "p1", "p2", "p3", "p4", "proper", "combinatorial", "0eu")


@dataclass
class RunReport:
    command: str
    input: str
    digest: str
    verdicts: dict[str, dict] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)
    data: dict = field(default_factory=dict)

    def add(self, name, status, detail="", witness=None):
        entry = {"status": status}
        if detail:
            entry["detail"] = detail
        if witness is not None:
            entry["witness"] = witness
        self.verdicts[name] = entry

    def exit_code(self) -> int:
        statuses = {v["status"] for v in self.verdicts.values()}
        if "error" in statuses:
            return EXIT_PRECONDITION
        if "fail" in statuses:
            return EXIT_FAIL
        return EXIT_OK

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "command": self.command,
            "input": self.input,
            "digest": self.digest,
            "verdicts": self.verdicts,
            "timings": self.timings,
            **self.data,
        }

    def to_text(self) -> str:
        lines = [f"{self.command} {self.input}"]
        for k, v in self.data.items():
            if not isinstance(v, (list, dict)):
                lines.append(f"  {k}: {v}")
        for name, v in self.verdicts.items():
            line = f"  {name}: {v['status']}"
            if v.get("detail"):
                line += f" ({v['detail']})"
            lines.append(line)
            w = v.get("witness")
            if isinstance(w, list):
                for item in w[:12]:
                    lines.append(f"    witness: {_fmt_witness(item)}")
                if len(w) > 12:
                    lines.append(f"    ... {len(w) - 12} more")
            elif w is not None:
                lines.append(f"    witness: {_fmt_witness(w)}")
        return "\n".join(lines) + "\n"


def _fmt_witness(w) -> str:
    if isinstance(w, dict) and "label" in w:
        return f"{w['label']} = {w['word']}" if w.get("word") else w["label"]
    if isinstance(w, (list, tuple)):
        return ", ".join(_fmt_witness(x) for x in w)
    if isinstance(w, dict):
        return ", ".join(f"{k}={_fmt_witness(v)}" for k, v in w.items())
    return str(w)


def word_label(S: sg.FiniteInverseSemigroup, s: int) -> str | None:
    """Spell ``s`` as a shortest word in the named generators, ``*`` for inverses."""
    try:
        letters = S.word(s)
    except InputError:
        return None
    out = []
    gens = set(S.generators)
    for a in letters:
        if a in gens and a in S.names:
            out.append(S.names[a])
        elif int(S.star[a]) in S.names:
            out.append(S.names[int(S.star[a])] + "*")
        else:
            return None
    return "".join(out) if all(len(x.rstrip("*")) == 1 for x in out) else " ".join(out)


def describe(S, s) -> dict:
    s = int(s)
    return {"index": s, "label": S.label(s), "word": word_label(S, s)}


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _emit(report: RunReport, fmt: str, out):
    if fmt == "json":
        out.write(json.dumps(report.to_dict(), indent=2, default=_json_default) + "\n")
    else:
        out.write(report.to_text())


def _json_default(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    return str(o)


def _timed(report, name, fn, *args):
    t = time.perf_counter()
    try:
        return fn(*args)
    finally:
        report.timings[name] = round(time.perf_counter() - t, 6)


def _load(args, report=None):
    path = Path(args.file)
    if not path.exists():
        raise ParseError("no such file", path=str(path))
    S = load_semigroup(path, cap=args.cap)
    return S


def _report(args, command) -> RunReport:
    path = Path(args.file)
    return RunReport(command=command, input=str(path), digest=_digest(path) if path.exists() else "")


# commands


def cmd_gen(args, out) -> int:
    report = _report(args, "gen")
    S = _timed(report, "load", _load, args)
    report.data.update(
        order=len(S),
        generators=len(S.generators),
        idempotents=len(S.idempotents),
        zero=S.label(S.zero) if S.zero is not None else None,
    )
    if args.format == "json":
        report.data["semigroup"] = S.to_dict()
    _emit(report, args.format, out)
    return report.exit_code()


def cmd_eggbox(args, out) -> int:
    S = _load(args)
    boxes = sg.eggbox(S)
    if args.dot:
        out.write(eggbox_dot(S, boxes))
    else:
        out.write(eggbox_text(S, boxes))
    return EXIT_OK


def _z3_witness(S, v):
    return [[describe(S, s), describe(S, t)] for s, t in v.witness]


def _run_prop(S, prop):
    if prop == "z1":
        v = sg.check_z1(S)
        return v, v.witness and {"idempotent": describe(S, v.witness[0]), "maxima": [describe(S, m) for m in v.witness[1]]}
    if prop == "z2":
        v = zpaths.check_z2(S)
        return v, v.witness and [describe(S, s) for s in v.witness[:10]]
    if prop == "z3":
        v = zpaths.check_z3(S)
        return v, None if v else _z3_witness(S, v)
    if prop == "p1":
        v = sg.check_p1(S)
        return v, v.witness and [describe(S, e) for e in v.witness]
    if prop == "p2":
        return sg.check_p2(S), None
    if prop == "p3":
        v = sg.check_p3(S)
        return v, v.witness and {"idempotent": describe(S, v.witness[0])}
    if prop == "p4":
        v = sg.check_p4(S)
        return v, v.witness and [describe(S, s) for s in v.witness]
    if prop == "proper":
        return sg.check_proper(S), None
    if prop == "combinatorial":
        v = sg.check_combinatorial(S)
        return v, v.witness and [describe(S, s) for s in v.witness]
    if prop == "0eu":
        v = sg.check_0_e_unitary(S)
        return v, v.witness and [describe(S, s) for s in v.witness]
    raise AssertionError(prop)


def cmd_check(args, out) -> int:
    props = [p.strip().lower() for p in args.props.split(",") if p.strip()]
    unknown = [p for p in props if p not in PROPS]
    if unknown:
        sys.stderr.write(f"unknown propert{'y' if len(unknown) == 1 else 'ies'}: {', '.join(unknown)}\n")
        return EXIT_USAGE
    report = _report(args, "check")
    S = _timed(report, "load", _load, args)
    report.data["order"] = len(S)
    for p in props:
        t = time.perf_counter()
        try:
            v, witness = _run_prop(S, p)
        except (AxiomError, InputError) as exc:
            report.add(p, "error", str(exc))
        else:
            report.add(p, "pass" if v else "fail", v.detail, None if v else witness)
        report.timings[p] = round(time.perf_counter() - t, 6)
    _emit(report, args.format, out)
    return report.exit_code()


def cmd_pathcat(args, out) -> int:
    S = _load(args)
    C = zpaths.path_category(S)
    if args.emit == "cat":
        out.write(C.to_cat())
    elif args.emit == "dot":
        out.write(category_dot(C))
    else:
        report = _report(args, "pathcat")
        report.data.update(objects=len(C.objects), morphisms=len(C))
        report.add("category_axioms", "pass" if check_category_axioms(C) else "fail")
        report.add("left_cancellative", "pass" if check_left_cancellative(C) else "fail")
        report.add("singly_aligned", "pass" if check_singly_aligned(C) else "fail")
        if args.emit == "json":
            report.data["morphism_names"] = C.morphisms
            report.data["elements"] = {C.morphisms[i]: S.label(s) for i, s in enumerate(C.element)}
        _emit(report, "json" if args.emit == "json" else "text", out)
        return report.exit_code()
    return EXIT_OK


def cmd_zm(args, out) -> int:
    path = Path(args.file)
    C = load_cat(path)
    report = _report(args, "zm")
    v = check_category_axioms(C)
    if not v:
        report.add("category_axioms", "error", v.detail, v.witness)
        _emit(report, args.format, out)
        return EXIT_PRECONDITION
    T = zm(C, cap=args.cap)
    report.data.update(objects=len(C.objects), morphisms=len(C), order=len(T))
    if args.format == "json":
        report.data["semigroup"] = T.to_dict()
    _emit(report, args.format, out)
    return report.exit_code()


def cmd_theta(args, out) -> int:
    report = _report(args, "theta")
    S = _load(args)
    report.data["order"] = len(S)
    for name, check in (("z1", sg.check_z1), ("z2", zpaths.check_z2), ("z3", zpaths.check_z3)):
        v = check(S)
        if not v:
            report.add("theta", "error", f"{name.upper()} fails")
            if name == "z3":
                report.verdicts["theta"]["witness"] = _z3_witness(S, v)
            _emit(report, args.format, out)
            return EXIT_PRECONDITION
    v = _timed(report, "theta", zpaths.theta_check, S)
    if v:
        report.add("theta", "pass", f"S is isomorphic to ZM(C(S)), order {len(S)}")
    else:
        w = dict(v.witness)
        for k in ("s", "t"):
            if k in w:
                w[k] = describe(S, w[k])
        report.add("theta", "fail", v.detail, w)
    _emit(report, args.format, out)
    return report.exit_code()


def cmd_morita(args, out) -> int:
    S = _load(args)
    if S.zero is None:
        raise InputError("IM(S, E, p) needs a semigroup with zero")
    IM = im_construction(S)
    if args.format == "json":
        out.write(json.dumps(IM.to_dict(), default=_json_default) + "\n")
    else:
        report = _report(args, "morita")
        report.data.update(base_order=len(S), order=len(IM))
        _emit(report, "text", out)
    return EXIT_OK


def cmd_graphis(args, out) -> int:
    G = load_graph(args.file)
    S = graph_inverse_semigroup(G)
    report = _report(args, "graphis")
    report.data.update(vertices=len(G.vertices), edges=len(G.edges), order=len(S))
    if args.format == "json":
        report.data["semigroup"] = S.to_dict()
    _emit(report, args.format, out)
    return report.exit_code()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zigzag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, helptext, fmt=True, file_help="input file (.pbij, .graph, .cat or .json)"):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file", help=file_help)
        p.add_argument("--cap", type=int, default=sg.DEFAULT_CAP, help="closure size cap")
        if fmt:
            p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=fn)
        return p

    add("gen", cmd_gen, "closure summary")
    p = add("eggbox", cmd_eggbox, "eggbox diagrams of the nonzero D-classes", fmt=False)
    p.add_argument("--dot", action="store_true", help="Graphviz output")
    p = add("check", cmd_check, "check axioms and Perrot conditions")
    p.add_argument("--props", default=",".join(PROPS), help="comma list from: " + ",".join(PROPS))
    p = add("pathcat", cmd_pathcat, "path category of the semigroup", fmt=False)
    p.add_argument("--emit", choices=("text", "json", "cat", "dot"), default="text")
    add("zm", cmd_zm, "zigzag inverse semigroup of a .cat category", file_help=".cat file")
    add("theta", cmd_theta, "verify S is isomorphic to ZM(C(S))")
    p = add("morita", cmd_morita, "IM(S, E, p) as semigroup JSON", fmt=False)
    p.add_argument("--format", choices=("text", "json"), default="json")
    add("graphis", cmd_graphis, "graph inverse semigroup of a .graph file", file_help=".graph file")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_USAGE
    except SizeCapError as exc:
        sys.stderr.write(f"resource error: {exc}\n")
        return EXIT_PRECONDITION
    except AxiomError as exc:
        sys.stderr.write(f"precondition failed: {exc}\n")
        return EXIT_PRECONDITION
    except InputError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_PRECONDITION
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ZigzagError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
