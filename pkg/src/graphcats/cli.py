"""Command-line interface.

Exit codes: 0 success, 1 semantic failure (invalid structure, kind
mismatch, failing law), 2 usage or parse error, 3 size cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures
from .dot import to_dot
from .errors import GraphCatError, KindError, SizeError, UnsupportedOperation
from .finset import DEFAULT_CAPS, Caps
from .functors import CATEGORIES, FUNCTORS, category_of_kind, fits
from .homsearch import HomQuery, run as run_query
from .structures import (
    MORPHISM_KINDS,
    morphism_to_json,
    object_from_json,
    object_to_json,
    violations,
)

OK, FAIL, USAGE, CAP = 0, 1, 2, 3

# category -> structure kind written to output files
OUTPUT_KIND = {
    "Q": "quiver",
    "Digra": "digraph",
    "SDigra": "symmetric-digraph",
    "H": "ssh",
    "H+": "ssh",
    "M": "multigraph",
    "SSys": "set-system",
    "Gra": "simple-graph",
    "R": "inc-hyp",
    "IStr": "istr",
}

KIND_ALIASES = {"strict": "strict-ssh", "weak": "weak-ssh", "set-system": "ssys", "simple-graph": "ssys"}


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def load(path: str):
    """Parse a structure file; returns ``(object, declared kind, predicate)``."""
    try:
        doc = json.loads(_read_text(path))
        if not isinstance(doc, dict):
            raise ValueError("top level must be a JSON object")
        obj, predicate = object_from_json(doc)
    except OSError as e:
        raise UsageError(f"{path}: {e.strerror or e}") from None
    except (ValueError, KeyError, TypeError, GraphCatError) as e:
        raise UsageError(f"{path}: cannot parse: {e}") from None
    return obj, doc["kind"], predicate


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def parse_caps(text: str | None) -> Caps:
    if not text:
        return DEFAULT_CAPS
    try:
        v, e, i = (int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"--caps wants V,E,I (three integers), got {text!r}") from None
    if min(v, e, i) <= 0:
        raise UsageError("--caps values must be positive")
    return Caps(vertices=v, edges=e, incidences=i)


def parse_pipeline(text: str) -> list[str]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    unknown = [n for n in names if n not in FUNCTORS]
    if unknown:
        raise UsageError(f"unknown functor(s): {', '.join(unknown)}")
    return names


def check_pipeline(names: list[str], start: str) -> str | None:
    """``None`` if the pipeline type-checks from category ``start``, else a message."""
    current = start
    for k, n in enumerate(names, 1):
        f = FUNCTORS[n]
        if not fits(current, f.source):
            return f"stage {k} ({n}) needs an object of {f.source}, but receives one of {current}"
        current = f.target
    return None


# ---------------------------------------------------------------- commands

def cmd_validate(args) -> int:
    obj, kind, predicate = load(args.file)
    predicate = args.predicate or predicate
    problems = violations(obj, predicate)
    if args.json:
        _emit(_dump({"file": args.file, "kind": kind, "predicate": predicate, "valid": not problems, "violations": problems}), None)
    elif problems:
        print(f"{args.file}: {len(problems)} violation(s)")
        for p in problems:
            print(f"  - {p}")
    else:
        print(f"{args.file}: valid {kind}" + (f" ({predicate})" if predicate else ""))
    return FAIL if problems else OK


def cmd_apply(args) -> int:
    names = parse_pipeline(args.pipeline)
    obj, kind, _ = load(args.file)
    start = args.category or category_of_kind(kind)
    if start not in CATEGORIES:
        raise UsageError(f"unknown category {start!r}")
    problems = CATEGORIES[start].object_problems(obj)
    if problems:
        print(f"input is not an object of {start}: {problems[0]}", file=sys.stderr)
        return FAIL
    msg = check_pipeline(names, start)
    if msg:
        print(f"pipeline rejected: {msg}", file=sys.stderr)
        return FAIL
    current = start
    for n in names:
        obj = FUNCTORS[n](obj)
        current = FUNCTORS[n].target
    _emit(_dump(object_to_json(obj, OUTPUT_KIND[current])), args.out)
    return OK


def cmd_homs(args) -> int:
    kind = KIND_ALIASES.get(args.kind, args.kind)
    if kind not in MORPHISM_KINDS:
        raise UsageError(f"unknown morphism kind {args.kind!r}; choose from {', '.join(MORPHISM_KINDS)}")
    a, _, _ = load(args.source)
    b, _, _ = load(args.target)
    mode = "count" if args.count else "exists" if args.exists else "enumerate"
    try:
        q = HomQuery(kind, a, b, mode, parse_caps(args.caps))
    except KindError as e:
        print(str(e), file=sys.stderr)
        return FAIL
    result = run_query(q)
    if mode == "count":
        print(result)
    elif mode == "exists":
        print("true" if result else "false")
    else:
        _emit(_dump([morphism_to_json(m, with_ends=False) for m in result]), args.out)
    return OK


def _report(reports, as_json: bool) -> int:
    passed = all(r.passed for r in reports)
    if as_json:
        _emit(_dump({"passed": passed, "reports": [r.to_json() for r in reports]}), None)
    else:
        for r in reports:
            print(r.line())
        print(f"{sum(r.passed for r in reports)}/{len(reports)} passed")
    return OK if passed else FAIL


def cmd_laws(args) -> int:
    from .laws.suite import SUITES, run_suite

    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    return _report(run_suite(args.suite, args.seed, args.cases), args.json)


def cmd_counterexample(args) -> int:
    from .laws.checks import COUNTEREXAMPLES, run_counterexample

    key = args.name.upper()
    if key not in COUNTEREXAMPLES:
        names = ", ".join(c.lower() for c in COUNTEREXAMPLES)
        raise UsageError(f"unknown counterexample {args.name!r}; choose from {names}")
    return _report([run_counterexample(key)], args.json)


def cmd_dot(args) -> int:
    obj, _, _ = load(args.file)
    _emit(to_dot(obj), args.out)
    return OK


def cmd_fixture(args) -> int:
    if args.name is None:
        print("\n".join(fixtures.FIXTURES))
        return OK
    if args.name not in fixtures.FIXTURES:
        raise UsageError(f"unknown fixture {args.name!r}")
    _emit(_dump(object_to_json(fixtures.FIXTURES[args.name])), args.out)
    return OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphcats", description="Graph categories, functors and law checks.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a structure file")
    s.add_argument("file")
    s.add_argument("--predicate", choices=["multigraph", "simple-graph", "symmetric"])
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("apply", help="run a comma-separated functor pipeline")
    s.add_argument("pipeline", help='e.g. "gamma" or "incl_weak,dual_ddag"; "" copies the input')
    s.add_argument("file")
    s.add_argument("--out")
    s.add_argument("--category", help="read the input as an object of this category (e.g. H+)")
    s.set_defaults(func=cmd_apply)

    s = sub.add_parser("homs", help="enumerate, count or test homomorphisms")
    s.add_argument("kind", help="morphism kind, e.g. strict-ssh, weak-ssh, ssys, quiver")
    s.add_argument("source")
    s.add_argument("target")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--exists", action="store_true")
    s.add_argument("--caps", help="V,E,I size limits (default 6,6,12)")
    s.add_argument("--out")
    s.set_defaults(func=cmd_homs)

    s = sub.add_parser("laws", help="run a law suite")
    s.add_argument("--suite", default="all")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cases", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_laws)

    s = sub.add_parser("counterexample", help="reproduce a counterexample (cx-gamma, cx-line, cx-dual, cx-weak)")
    s.add_argument("name")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_counterexample)

    s = sub.add_parser("dot", help="render a structure as Graphviz DOT")
    s.add_argument("file")
    s.add_argument("--out")
    s.set_defaults(func=cmd_dot)

    s = sub.add_parser("fixture", help="write a built-in structure as JSON (no name lists them)")
    s.add_argument("name", nargs="?")
    s.add_argument("--out")
    s.set_defaults(func=cmd_fixture)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except SizeError as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return CAP
    except (KindError, UnsupportedOperation) as e:
        print(f"error: {e}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
