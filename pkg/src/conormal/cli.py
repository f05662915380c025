"""Command-line front end.

Exit codes: 0 success, 1 failed validation or negative verdict, 2 usage,
I/O or malformed-input error.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import builders
from .chain import conormal_complex, format_matrix
from .face_complex import (
    ComplexError,
    complex_from_dict,
    parse_complex,
    serialize,
    validate,
)
from .homology import NotACycleError, all_homology, homology_report
from .obstruction import (
    IndexAssignment,
    IndexDocumentError,
    Status,
    boundary_touched_faces,
    corner_cycle_faces,
    decide_sfp,
    odd_index_class,
)

OK, NEGATIVE, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    exit_code: int
    report: str
    errors: str = ""


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_complex(path, allow_disconnected=False):
    return parse_complex(_read(path), allow_disconnected=allow_disconnected)


def _load_index(path):
    return IndexAssignment.from_json(_read(path))


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="conormal", description="Conormal homology of manifolds with embedded corners.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="write a standard face complex")
    b.add_argument("kind", choices=["point", "interval", "disk", "square", "polygon", "simplex", "hypercube", "product"])
    b.add_argument("args", nargs="*", help="K for polygon, N for simplex/hypercube, A.json B.json for product")
    b.add_argument("-o", "--output", help="output file (default: standard output)")

    v = sub.add_parser("validate", help="check the embedded-corners axioms")
    v.add_argument("complex")
    v.add_argument("--json", action="store_true")
    v.add_argument("--allow-disconnected", action="store_true")

    h = sub.add_parser("homology", help="conormal homology groups")
    h.add_argument("complex")
    h.add_argument("--periodic", action="store_true", help="also report even/odd sums")
    h.add_argument("--dump-matrices", action="store_true")
    h.add_argument("--json", action="store_true")
    h.add_argument("--allow-disconnected", action="store_true")

    f = sub.add_parser("faces", help="list F_p, corner-cycle faces, or boundary-touched faces")
    f.add_argument("complex")
    f.add_argument("-p", type=int, required=True, dest="codim")
    kind = f.add_mutually_exclusive_group()
    kind.add_argument("--cycles", action="store_true")
    kind.add_argument("--delta", action="store_true")
    f.add_argument("--json", action="store_true")
    f.add_argument("--allow-disconnected", action="store_true")

    o = sub.add_parser("obstruction", help="decide SFP from degree-2 index values")
    o.add_argument("complex")
    o.add_argument("--indices", required=True)
    o.add_argument("--odd", nargs=2, metavar=("TOP", "ONE"))
    o.add_argument("--json", action="store_true")
    o.add_argument("--allow-disconnected", action="store_true")
    return p


def _int_arg(args, k, what):
    if len(args) != k:
        raise UsageError(f"{what} takes {k} argument(s), got {len(args)}")
    try:
        return [int(a) for a in args]
    except ValueError:
        raise UsageError(f"{what} needs integer arguments") from None


def cmd_build(ns, out):
    kind, args = ns.kind, ns.args
    if kind in ("point", "interval", "disk", "square"):
        if args:
            raise UsageError(f"{kind} takes no arguments")
        X = getattr(builders, kind)()
    elif kind == "product":
        if len(args) != 2:
            raise UsageError("product takes two complex files")
        X = builders.product(_load_complex(args[0]), _load_complex(args[1]))
    else:
        (k,) = _int_arg(args, 1, kind)
        try:
            X = getattr(builders, kind)(k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    text = serialize(X)
    if ns.output:
        try:
            Path(ns.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {ns.output}: {exc.strerror}") from None
    else:
        out.write(text)
    return OK


def cmd_validate(ns, out):
    text = _read(ns.complex)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexError(f"{exc.msg} (line {exc.lineno}, column {exc.colno})") from None
    X = complex_from_dict(doc)
    report = validate(X, allow_disconnected=ns.allow_disconnected)
    if ns.json:
        out.write(_dump({
            "name": X.name,
            "valid": report.ok,
            "violations": [{"rule": v.rule, "subject": v.subject, "message": v.message} for v in report.violations],
        }))
    elif report.ok:
        out.write(f"{X.name}: ok ({len(X.faces)} faces, codim {X.codim})\n")
    else:
        out.write("".join(f"{m}\n" for m in report.messages()))
    return OK if report.ok else NEGATIVE


def cmd_homology(ns, out):
    X = _load_complex(ns.complex, ns.allow_disconnected)
    K = conormal_complex(X)
    if ns.json:
        doc = homology_report(X, periodic=ns.periodic)
        if ns.dump_matrices:
            doc["matrices"] = [
                {"degree": p, "rows": list(M.row_labels), "cols": list(M.col_labels), "entries": M.tolist()}
                for p, M in ((p, K.boundary(p)) for p in range(1, K.top + 1))
            ]
        out.write(_dump(doc))
        return OK
    groups = all_homology(K)
    out.write(f"{X.name} (codim {X.codim})\n")
    for H in reversed(groups):
        out.write(f"p={H.degree}: {H}\n")
    if ns.periodic:
        for label, part in (("even", groups[0::2]), ("odd", groups[1::2])):
            text = " ⊕ ".join(str(H) for H in part if not H.is_zero) or "0"
            out.write(f"{label}: {text}\n")
    if ns.dump_matrices:
        for p in range(1, K.top + 1):
            out.write(format_matrix(K.boundary(p), f"delta_{p}") + "\n")
    return OK


def cmd_faces(ns, out):
    X = _load_complex(ns.complex, ns.allow_disconnected)
    p = ns.codim
    if ns.cycles:
        kind, faces = "cycles", corner_cycle_faces(X, p)
    elif ns.delta:
        kind, faces = "delta", boundary_touched_faces(X, p)
    else:
        kind, faces = "all", X.faces_of_codim(p)
    if ns.json:
        out.write(_dump({"codim": p, "kind": kind, "faces": faces}))
    else:
        out.write(" ".join(faces) + "\n")
    return OK


def cmd_obstruction(ns, out):
    X = _load_complex(ns.complex, ns.allow_disconnected)
    verdict = decide_sfp(X, _load_index(ns.indices))
    doc = verdict.to_dict()
    code = OK if verdict.holds else NEGATIVE
    if ns.odd:
        top, one = (_load_index(path) for path in ns.odd)
        try:
            doc["odd"] = odd_index_class(X, top, one).to_dict()
        except NotACycleError as exc:
            doc["odd"] = {"codim": X.codim, "top_cycle": None, "h1_class": None, "error": str(exc)}
            code = NEGATIVE
    if ns.json:
        out.write(_dump(doc))
        return code
    out.write(f"status: {doc['status']}\n")
    if verdict.witness is not None:
        out.write(f"witness: {verdict.witness}\n")
    if verdict.class_coordinates is not None:
        c = verdict.class_coordinates
        out.write(f"class: free={list(c.free)} torsion={list(c.torsion)}\n")
    for w in verdict.warnings:
        out.write(f"warning: {w}\n")
    for d in verdict.diagnostics:
        out.write(f"note: {d}\n")
    if "odd" in doc:
        odd = doc["odd"]
        if "error" in odd:
            out.write(f"odd: {odd['error']}\n")
        else:
            out.write(f"odd: top_cycle={odd['top_cycle']} h1_class={odd['h1_class']}\n")
    if verdict.status is Status.NOT_A_CYCLE:
        code = NEGATIVE
    return code


COMMANDS = {
    "build": cmd_build,
    "validate": cmd_validate,
    "homology": cmd_homology,
    "faces": cmd_faces,
    "obstruction": cmd_obstruction,
}


def run(argv) -> CommandResult:
    out, err = io.StringIO(), io.StringIO()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            ns = _parser().parse_args(list(argv))
    except SystemExit as exc:
        return CommandResult(USAGE if exc.code else OK, out.getvalue(), err.getvalue())
    try:
        code = COMMANDS[ns.command](ns, out)
    except (UsageError, ComplexError, IndexDocumentError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        return CommandResult(USAGE, "", f"error: {msg}\n")
    return CommandResult(code, out.getvalue(), err.getvalue())


def main(argv=None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.report)
    sys.stderr.write(result.errors)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
