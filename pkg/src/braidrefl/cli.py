"""Command-line front end.

Subcommands: orbit, hurwitz, classify, charpoly, catalog, realize, and
verify.  All machine output is JSON; ``--format text`` renders the same
data for reading.  Exit codes: 0 success, 1 verification failure,
2 input error (with a machine-readable error object on stderr).
"""

import argparse
import json
import sys

from .arrangement import ArrangementMatrix
from .orbits import classify_3x3, hurwitz_orbit, matrix_orbit, reflection_element
from .quasicox import charpoly as qc_charpoly, cox_matrix, cyclo_fingerprint


class InputError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e


def _read_matrix(path: str) -> ArrangementMatrix:
    try:
        return ArrangementMatrix.from_json(_read_text(path))
    except InputError:
        raise
    except Exception as e:
        raise InputError(f"bad matrix file {path}: {e}") from e


def _emit(doc: dict, args) -> None:
    if args.format == "json":
        text = json.dumps(doc, indent=None if args.out else 1)
    else:
        text = _render_text(doc)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _render_text(doc, indent="") -> str:
    if isinstance(doc, dict):
        lines = []
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                lines.append(_render_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(doc, list):
        return "\n".join(_render_text(v, indent + "- ") for v in doc)
    return f"{indent}{json.dumps(doc)}"


def _cmd_orbit(args) -> int:
    B = _read_matrix(args.file)
    report = matrix_orbit(B, cap=args.cap)
    _emit(json.loads(report.to_json()), args)
    return 0


def _cmd_hurwitz(args) -> int:
    from .catalog import root_system

    try:
        doc = json.loads(_read_text(args.file))
        group = doc["group"]
        refs = doc["reflections"]
    except InputError:
        raise
    except Exception as e:
        raise InputError(f"bad tuple file {args.file}: {e}") from e
    try:
        R = root_system(group)
        t = tuple(reflection_element(R, int(a)) for a in refs)
    except (ValueError, IndexError, KeyError) as e:
        raise InputError(str(e)) from e
    report = hurwitz_orbit(t, cap=args.cap)
    _emit(json.loads(report.to_json()), args)
    return 0


def _cmd_classify(args) -> int:
    B = _read_matrix(args.file)
    try:
        result = classify_3x3(B, cap=args.cap)
    except ValueError as e:
        raise InputError(str(e)) from e
    _emit(json.loads(result.to_json()), args)
    return 0


def _cmd_charpoly(args) -> int:
    B = _read_matrix(args.file)
    fp = cyclo_fingerprint(qc_charpoly(cox_matrix(B)))
    _emit(json.loads(fp.to_json()), args)
    return 0


def _cmd_catalog(args) -> int:
    from .catalog import root_system, universal_matrix

    if args.summary:
        try:
            R = root_system(args.label)
        except ValueError as e:
            raise InputError(str(e)) from e
        _emit(
            {
                "group": R.label,
                "rank": R.rank,
                "roots": len(R.roots),
                "reflections": R.nreflections,
            },
            args,
        )
        return 0
    try:
        B = universal_matrix(args.label)
    except (ValueError, KeyError, IndexError) as e:
        raise InputError(str(e)) from e
    _emit(json.loads(B.to_json()), args)
    return 0


def _cmd_realize(args) -> int:
    from .realization import minimal_realization, unique_realization

    B = _read_matrix(args.file)
    try:
        if args.kind == "unique":
            real = unique_realization(B)
        else:
            real = minimal_realization(B)
    except ValueError as e:
        raise InputError(str(e)) from e
    _emit(json.loads(real.to_json()), args)
    return 0


def _cmd_verify(args) -> int:
    from . import verify

    suite = verify.SUITES.get(args.suite)
    if suite is None:
        raise InputError(
            f"unknown suite {args.suite!r}; choose from "
            + ", ".join(sorted(verify.SUITES))
        )
    kwargs = {}
    if args.suite == "dn-orbits":
        kwargs["n"] = args.n
    if args.suite == "e-table":
        kwargs["long"] = args.long
    if args.suite == "determinism":
        kwargs["threads"] = (1, args.threads)
    rows = suite(**kwargs)
    ok = all(r["ok"] for r in rows)
    if args.format == "json":
        _emit({"suite": args.suite, "ok": ok, "rows": rows}, args)
    else:
        lines = [
            f"{'PASS' if r['ok'] else 'FAIL'}  {r['name']}"
            + (f"  ({r['detail']})" if r["detail"] else "")
            for r in rows
        ]
        lines.append(f"{'PASS' if ok else 'FAIL'}  suite {args.suite}")
        text = "\n".join(lines)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidrefl",
        description="Braid-group orbits of reflection arrangements, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, cap=None):
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", metavar="FILE")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--long", action="store_true")
        if cap is not None:
            p.add_argument("--cap", type=int, default=cap)

    p = sub.add_parser("orbit", help="braid orbit of an arrangement matrix")
    p.add_argument("file", help="matrix JSON file, or - for stdin")
    common(p, cap=10**6)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("hurwitz", help="Hurwitz orbit of a reflection tuple")
    p.add_argument("file", help='JSON {"group": ..., "reflections": [...]}')
    common(p, cap=10**7)
    p.set_defaults(func=_cmd_hurwitz)

    p = sub.add_parser("classify", help="finiteness verdict for a 3x3 matrix")
    p.add_argument("file")
    common(p, cap=10**5)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("charpoly", help="product-element fingerprint of a matrix")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("catalog", help="emit a named matrix or group summary")
    p.add_argument("label", help='e.g. "A4", "D5", "H4:3", "F4"')
    p.add_argument("--summary", action="store_true", help="root-system summary")
    common(p)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("realize", help="reconstruct reflections from a matrix")
    p.add_argument("file")
    p.add_argument("--kind", choices=("minimal", "unique"), default="minimal")
    common(p)
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite")
    p.add_argument("--n", type=int, default=4, help="rank for dn-orbits")
    common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    if getattr(args, "cap", 1) is not None and getattr(args, "cap", 1) <= 0:
        print(json.dumps({"error": "cap must be positive"}), file=sys.stderr)
        return 2
    if args.threads <= 0:
        print(json.dumps({"error": "thread count must be positive"}), file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except InputError as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
