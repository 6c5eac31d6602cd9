"""Command-line front end.

Each command reads element/tensor JSON from ``--input`` files and ``--inline``
strings (in command-line order) and prints a JSON report.

Exit status: 0 on success or a passing check, 1 on a failed check, 2 on
input errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .algebra import BarElement, HElement, bracket, bracket_bar, product
from .bialgebra import (
    RMatrix,
    check_bialgebra,
    cobracket,
    cybe,
    default_bound,
    first_nonannihilating,
    triangular_from_pair,
)
from .errors import ConstraintError, HamLieError
from .sampling import random_h, random_monomial
from .serialize import Parsed, parse_element
from .tensor import TensorElement
from .verify import lemma23_harness, skew_closure_harness

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(HamLieError):
    pass


class _Source(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        kind = "file" if option_string == "--input" else "inline"
        namespace.sources = list(getattr(namespace, "sources", None) or []) + [(kind, values)]


def _load_inputs(args) -> List[Parsed]:
    out = []
    for i, (kind, value) in enumerate(args.sources or []):
        if kind == "file":
            try:
                text = Path(value).read_text(encoding="utf-8")
            except OSError as exc:
                raise InputError(f"cannot read {value}: {exc.strerror}") from None
            out.append(parse_element(text, location=value))
        else:
            out.append(parse_element(value, location=f"inline[{i}]"))
    ns = {x.n for x in out}
    if args.n is not None:
        ns.add(args.n)
    if len(ns) > 1:
        raise InputError(f"inputs disagree on the ambient n: {sorted(ns)}")
    return out


def _expect(items: List[Parsed], count: int, what: str) -> List[Parsed]:
    if len(items) < count:
        raise InputError(f"expected {count} input(s): {what}; got {len(items)}")
    return items


def _as_h(x: Parsed, label: str) -> HElement:
    if not isinstance(x, HElement):
        raise InputError(f"{label} must be an element of H (kind 'h')")
    return x


def _as_tensor(x: Parsed, label: str, m: Optional[int] = None) -> TensorElement:
    if isinstance(x, HElement) and m in (None, 1):
        return TensorElement.from_element(x)
    if not isinstance(x, TensorElement) or (m is not None and x.m != m):
        raise InputError(f"{label} must be a tensor" + (f" of arity {m}" if m else ""))
    return x


def _to_bar(x: Parsed) -> BarElement:
    if isinstance(x, HElement):
        return x.lift()
    if isinstance(x, BarElement):
        return x
    raise InputError("expected an algebra element, got a tensor")


def cmd_bracket(args, items):
    x, y = _expect(items, 2, "x, y")[:2]
    if isinstance(x, HElement) and isinstance(y, HElement):
        return EXIT_OK, {"result": bracket(x, y).to_dict()}
    return EXIT_OK, {"result": bracket_bar(_to_bar(x), _to_bar(y)).to_dict()}


def cmd_product(args, items):
    x, y = _expect(items, 2, "u, v")[:2]
    return EXIT_OK, {"result": product(_to_bar(x), _to_bar(y)).to_dict()}


def cmd_cobracket(args, items):
    r, x = _expect(items, 2, "r, x")[:2]
    rm = RMatrix(_as_tensor(r, "r", 2))
    return EXIT_OK, {"result": cobracket(rm, _as_h(x, "x")).to_dict()}


def cmd_cybe(args, items):
    r = _as_tensor(_expect(items, 1, "r")[0], "r", 2)
    c = cybe(r)
    return (EXIT_OK if c.is_zero() else EXIT_FAIL), {"zero": c.is_zero(), "result": c.to_dict()}


def _samples(rng: random.Random, n: int, count: int) -> List[HElement]:
    # alternate monomials and two-term elements
    return [random_monomial(rng, n) if i % 2 == 0 else random_h(rng, n, terms=2) for i in range(count)]


def cmd_check_bialgebra(args, items):
    r = RMatrix(_as_tensor(_expect(items, 1, "r")[0], "r", 2))
    extra = [_as_h(x, "sample") for x in items[1:]]
    rng = random.Random(args.seed)
    xs = extra + _samples(rng, r.n, args.samples)
    ys = _samples(rng, r.n, len(xs))
    reports = check_bialgebra(r, xs, list(zip(xs, ys)))
    passed = all(rep.passed for rep in reports)
    return (EXIT_OK if passed else EXIT_FAIL), {
        "seed": args.seed,
        "samples": len(xs),
        "cybe_zero": cybe(r).is_zero(),
        "passed": passed,
        "checks": [rep.to_dict() for rep in reports],
    }


def cmd_triangular(args, items):
    a, b = _expect(items, 2, "a, b")[:2]
    try:
        r = triangular_from_pair(_as_h(a, "a"), _as_h(b, "b"))
    except ConstraintError as exc:
        defect = exc.defect.to_dict() if exc.defect is not None else None
        return EXIT_FAIL, {"passed": False, "defect": defect, "description": str(exc)}
    return EXIT_OK, {"passed": True, "result": r.value.to_dict(), "cybe_zero": True}


def cmd_witness(args, items):
    c = _as_tensor(_expect(items, 1, "c")[0], "c")
    bound = default_bound(c) if args.K is None else args.K
    w = first_nonannihilating(c, bound)
    return (EXIT_OK if w is None else EXIT_FAIL), {
        "K": bound,
        "witness": None if w is None else w.to_dict(),
        "description": "no witness up to bound" if w is None else "x . c != 0",
    }


def cmd_lemma23(args, items):
    if args.p is None:
        raise InputError("lemma23 needs --p")
    v = _as_tensor(_expect(items, 1, "v")[0], "v", 2)
    rep = lemma23_harness(v, args.p, args.K)
    return (EXIT_OK if rep.passed else EXIT_FAIL), rep.to_dict()


def cmd_skew_closure(args, items):
    r = _as_tensor(_expect(items, 1, "r")[0], "r", 2)
    sample = [_as_h(x, "sample") for x in items[1:]]
    if args.samples:
        sample += _samples(random.Random(args.seed), r.n, args.samples)
    rep = skew_closure_harness(r, sample, args.K)
    return (EXIT_OK if rep.passed else EXIT_FAIL), rep.to_dict()


COMMANDS = {
    "bracket": (cmd_bracket, "bracket of two elements (H, or H-bar if either is kind 'bar')"),
    "product": (cmd_product, "Poisson product in H-bar"),
    "cobracket": (cmd_cobracket, "Delta_r(x) = x . r for skew r"),
    "cybe": (cmd_cybe, "classical Yang-Baxter tensor c(r); exit 1 if nonzero"),
    "check-bialgebra": (cmd_check_bialgebra, "coboundary bialgebra axioms on seeded samples"),
    "triangular": (cmd_triangular, "r = a(x)b - b(x)a from [a,b] = b"),
    "witness": (cmd_witness, "search x with x . c != 0; exit 1 if found"),
    "lemma23": (cmd_lemma23, "bounded V^p membership harness"),
    "skew-closure": (cmd_skew_closure, "bounded skew-closure harness"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hamlie", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", action=_Source, dest="sources", metavar="PATH")
        p.add_argument("--inline", action=_Source, dest="sources", metavar="JSON")
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--p", type=int, default=None)
        p.add_argument("--K", type=int, default=None)
        p.add_argument("--samples", type=int, default=50 if name == "check-bialgebra" else 0)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--output", default=None, metavar="PATH")
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        code, body = handler(args, _load_inputs(args))
    except HamLieError as exc:
        code, body = EXIT_INPUT, {"error": str(exc)}
    report = json.dumps({"command": args.command, **body}, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(report, encoding="utf-8")
    else:
        sys.stdout.write(report)
    if code == EXIT_INPUT:
        print(f"hamlie {args.command}: {body['error']}", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
