"""Command-line interface.

Exit status: 0 when a result is produced, 2 when an input object fails
validation or lies outside a map's domain, 1 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from . import analysis, bijections, growth, patterns, rectangles
from .bijections import Shape
from .objects import (
    Asm,
    DomainError,
    GogWord,
    InvalidObjectError,
    MagogTriangle,
    MonotoneTriangle,
    ShapeError,
    parse_gog_word,
    parse_permutation,
    permutation_to_monotone,
    validate_asm,
    validate_gog_word,
    validate_magog,
    validate_monotone,
)

FORMAT_VERSION = "1"

KINDS = ("asm", "monotone", "gogword", "magog", "shape")

DEFAULT_COUNT_LIMIT = 24
DEFAULT_TABLE_LIMIT = 14


class UsageError(Exception):
    pass


class ValidationFailure(Exception):
    def __init__(self, message: str, details: Any = None):
        super().__init__(message)
        self.details = details


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 by default
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def envelope(command: str, parameters: dict, result: Any) -> str:
    return json.dumps(
        {"command": command, "parameters": parameters, "result": result, "version": FORMAT_VERSION},
        sort_keys=True,
    )


# ---------------------------------------------------------------------------
# Object I/O


def load_object(kind: str, text: str):
    """Parse ``text`` as an object of ``kind`` in the documented JSON/text formats."""
    text = text.strip()
    try:
        if kind == "gogword":
            if text.startswith("{") or text.startswith('"'):
                data = json.loads(text)
                text = data["word"] if isinstance(data, dict) else data
            return GogWord(parse_gog_word(text))
        data = json.loads(text)
        if kind == "asm":
            return Asm(data["matrix"] if isinstance(data, dict) else data)
        rows = data["rows"] if isinstance(data, dict) else data
        if kind == "monotone":
            return MonotoneTriangle(rows)
        if kind == "magog":
            return MagogTriangle(rows)
        if kind == "shape":
            n = data.get("n") if isinstance(data, dict) else None
            return Shape(rows, n)
    except InvalidObjectError as exc:
        raise ValidationFailure(str(exc), exc.report.to_dict()) from exc
    except (ShapeError, DomainError) as exc:
        raise ValidationFailure(str(exc)) from exc
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot parse {kind} input: {exc}") from exc
    except ValueError as exc:
        raise ValidationFailure(str(exc)) from exc
    raise UsageError(f"unknown object kind {kind!r}")


def dump_object(obj) -> Any:
    if isinstance(obj, GogWord):
        return str(obj)
    return obj.to_json()


def to_monotone(obj) -> MonotoneTriangle:
    if isinstance(obj, MonotoneTriangle):
        return obj
    if isinstance(obj, Asm):
        return bijections.asm_to_monotone(obj)
    if isinstance(obj, GogWord):
        return bijections.gog_word_to_monotone(obj)
    if isinstance(obj, MagogTriangle):
        return bijections.delta_inverse(obj)
    if isinstance(obj, Shape):
        return bijections.shape_to_triangle(obj)
    raise TypeError(type(obj))


def from_monotone(t: MonotoneTriangle, kind: str):
    return {
        "monotone": lambda: t,
        "asm": lambda: bijections.monotone_to_asm(t),
        "gogword": lambda: bijections.monotone_to_gog_word(t),
        "magog": lambda: bijections.delta(t),
        "shape": lambda: bijections.shape_of(t),
    }[kind]()


def _read_input(args) -> str:
    if getattr(args, "input", None):
        if args.input == "-":
            return sys.stdin.read()
        with open(args.input) as fh:
            return fh.read()
    if getattr(args, "value", None) is not None:
        return args.value
    return sys.stdin.read()


# ---------------------------------------------------------------------------
# Commands


def cmd_count(args) -> str:
    kind = args.kind
    if kind in ("gapless-shapes", "asm", "alpha"):
        if args.n is None:
            raise UsageError(f"count {kind} needs --n")
        if args.n < 1:
            raise UsageError("--n must be >= 1")
        params = {"kind": kind, "n": args.n}
    else:
        if args.m is None or args.p is None:
            raise UsageError("count rho needs --m and --p")
        if args.m < 0 or args.p < 0:
            raise UsageError("--m and --p must be >= 0")
        params = {"kind": kind, "m": args.m, "p": args.p}
    if kind == "gapless-shapes":
        limit = args.limit if args.limit is not None else DEFAULT_COUNT_LIMIT
        if args.n > limit:
            raise UsageError(f"n={args.n} exceeds the size guard {limit} (use --limit)")
        value = growth.count_gapless_shapes(args.n, workers=args.threads)
    elif kind == "asm":
        value = analysis.asm_count(args.n)
    elif kind == "alpha":
        value = rectangles.alpha(args.n)
    else:
        value = rectangles.rho(args.m, args.p)
    if args.format == "json":
        return envelope("count", params, str(value))
    return str(value)


def table_rows(max_n: int) -> list[tuple[int, int, int]]:
    return [(n, growth.count_gapless_shapes(n), analysis.asm_count(n)) for n in range(1, max_n + 1)]


def cmd_table(args) -> str:
    limit = args.limit if args.limit is not None else DEFAULT_TABLE_LIMIT
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    if args.max_n > limit:
        raise UsageError(f"max-n={args.max_n} exceeds the table guard {limit} (use --limit)")
    rows = table_rows(args.max_n)
    if args.format == "csv":
        return "size,gapless,asm\n" + "".join(f"{n},{g},{a}\n" for n, g, a in rows)
    if args.format == "json":
        result = [{"size": n, "gapless": str(g), "asm": str(a)} for n, g, a in rows]
        return envelope("table", {"max_n": args.max_n}, result) + "\n"
    w1 = max(len("size"), *(len(str(r[0])) for r in rows))
    w2 = max(len("gapless"), *(len(str(r[1])) for r in rows))
    w3 = max(len("asm"), *(len(str(r[2])) for r in rows))
    lines = [f"{'size':>{w1}}  {'gapless':>{w2}}  {'asm':>{w3}}"]
    lines += [f"{n:>{w1}}  {g:>{w2}}  {a:>{w3}}" for n, g, a in rows]
    return "\n".join(lines) + "\n"


def cmd_convert(args) -> str:
    obj = load_object(args.source, _read_input(args))
    try:
        t = to_monotone(obj)
        out = from_monotone(t, args.target)
    except InvalidObjectError as exc:
        raise ValidationFailure(str(exc), exc.report.to_dict()) from exc
    except (DomainError, ValueError) as exc:
        raise ValidationFailure(str(exc)) from exc
    result = dump_object(out)
    if args.format == "json":
        return envelope("convert", {"from": args.source, "to": args.target}, result)
    return result if isinstance(result, str) else json.dumps(result)


def _check_subject(args) -> tuple[str, Any, dict]:
    if args.word is not None:
        return "gogword", load_object("gogword", args.word), {"word": args.word}
    if args.perm is not None:
        try:
            perm = parse_permutation(args.perm)
        except ValueError as exc:
            raise ValidationFailure(str(exc)) from exc
        return "perm", perm, {"perm": args.perm}
    kind = args.kind or "monotone"
    text = _read_input(args)
    return kind, load_object(kind, text), {"kind": kind}


def cmd_check(args) -> str:
    what = args.what
    if what == "valid":
        return _check_valid(args)
    kind, subject, params = _check_subject(args)
    params = {"what": what, **params}
    if what == "gapless":
        if isinstance(subject, MagogTriangle):
            gaps = subject.gaps()
        else:
            t = permutation_to_monotone(subject) if kind == "perm" else to_monotone(subject)
            gaps = t.gaps()
        result = {"gapless": not gaps, "gaps": [[g.i, g.j] for g in gaps]}
    else:
        if kind == "perm":
            word = GogWord([(v,) for v in subject])
        elif isinstance(subject, GogWord):
            word = subject
        else:
            word = bijections.monotone_to_gog_word(to_monotone(subject))
        found = patterns.word_312_first_position(word)
        if found is None:
            result = {"contains": False, "word": str(word)}
        else:
            pos, wit = found
            result = {"contains": True, "position": pos, "witness": wit.to_dict(), "word": str(word)}
    if args.format == "json":
        return envelope("check", params, result)
    return _plain_verdict(what, result)


def _plain_verdict(what: str, result: dict) -> str:
    if what == "gapless":
        if result["gapless"]:
            return "gapless"
        return "gaps at " + ", ".join(f"({i},{j})" for i, j in result["gaps"])
    if result["contains"]:
        w = result["witness"]
        return (f"contains 312-subpattern at position {result['position']}: "
                f"(c,a,b)=({w['c']},{w['a']},{w['b']}) in letters ({w['i']},{w['j']},{w['k']})")
    return "avoids 312-subpattern"


_VALIDATORS: dict[str, Callable] = {
    "monotone": lambda d: validate_monotone(d["rows"] if isinstance(d, dict) else d),
    "magog": lambda d: validate_magog(d["rows"] if isinstance(d, dict) else d),
    "asm": lambda d: validate_asm(d["matrix"] if isinstance(d, dict) else d),
}


def _check_valid(args) -> str:
    if args.word is not None:
        kind = "gogword"
        try:
            letters = parse_gog_word(args.word)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        rep = validate_gog_word(letters, args.size)
        params = {"what": "valid", "word": args.word}
    else:
        kind = args.kind or "monotone"
        if kind not in _VALIDATORS:
            raise UsageError(f"check valid supports --word or --kind in {sorted(_VALIDATORS)}")
        try:
            data = json.loads(_read_input(args))
            rep = _VALIDATORS[kind](data)
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot parse {kind} input: {exc}") from exc
        except ShapeError as exc:
            raise ValidationFailure(str(exc)) from exc
        params = {"what": "valid", "kind": kind}
    if args.format == "json":
        out = envelope("check", params, rep.to_dict())
    else:
        out = "valid" if rep else "; ".join(v.message for v in rep.violations)
    if not rep:
        raise ValidationFailure(out, rep.to_dict())
    return out


def cmd_asym(args) -> str:
    what = args.what
    if what == "asm":
        n = args.n or 500
        fit = analysis.asm_asymptotic_check(n, n_min=args.n_min or 1)
        if args.format == "json":
            result = {"log_beta": fit.log_beta, "exponent": fit.exponent, "log_gamma": fit.log_gamma,
                      "normalized": fit.rows[-1].exact / n ** 2,
                      "rows": [vars(r) for r in fit.rows]}
            return envelope("asym", {"what": what, "n": n}, result)
        return analysis.residuals_to_csv(fit.rows)
    if what == "rho":
        n = args.n or 50
        rows = analysis.rho_asymptotic_check(n, n_min=args.n_min or 1)
        if args.format == "json":
            return envelope("asym", {"what": what, "n": n}, [vars(r) for r in rows])
        return analysis.residuals_to_csv(rows)
    max_n = args.max_n or 12
    limit = args.limit if args.limit is not None else DEFAULT_COUNT_LIMIT
    if max_n > limit:
        raise UsageError(f"max-n={max_n} exceeds the size guard {limit} (use --limit)")
    counts = {n: growth.count_gapless_shapes(n) for n in range(1, max_n + 1)}
    series = analysis.entropy_series(counts)
    if args.format == "json":
        return envelope("asym", {"what": what, "max_n": max_n}, [vars(r) for r in series])
    return analysis.entropy_to_csv(series)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gapless", description="Gapless monotone triangles, Gog words and friends.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="exact counts")
    p.add_argument("kind", choices=["gapless-shapes", "asm", "rho", "alpha"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--limit", type=int, help=f"size guard for gapless-shapes (default {DEFAULT_COUNT_LIMIT})")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="gapless and total ASM counts by size")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--limit", type=int, help=f"size guard (default {DEFAULT_TABLE_LIMIT})")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("convert", help="convert between representations")
    p.add_argument("--from", dest="source", choices=KINDS, required=True)
    p.add_argument("--to", dest="target", choices=KINDS, required=True)
    p.add_argument("--input", help="file to read ('-' for stdin)")
    p.add_argument("--value", help="object given inline")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("check", help="gapless / 312 / validity checks")
    p.add_argument("what", choices=["gapless", "312", "valid"])
    p.add_argument("--word")
    p.add_argument("--perm")
    p.add_argument("--size", type=int, help="expected size for --word validation")
    p.add_argument("--kind", choices=KINDS)
    p.add_argument("--input")
    p.add_argument("--value")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("asym", help="asymptotic residual reports (CSV)")
    p.add_argument("what", choices=["asm", "rho", "gapless-trend"])
    p.add_argument("--n", type=int)
    p.add_argument("--n-min", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--limit", type=int)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_asym)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValidationFailure as exc:
        msg = str(exc)
        if getattr(args, "format", "text") == "json" and msg.startswith("{"):
            print(msg)
        else:
            print(f"invalid: {msg}", file=sys.stderr)
        return 2
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
