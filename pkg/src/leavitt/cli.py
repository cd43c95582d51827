"""Command line front end.

Exit codes: 0 for success or a passing verdict, 1 for a failing verdict,
2 for parse and validation errors.
"""

from __future__ import annotations

import argparse
import random
import re
import sys
from importlib import resources
from pathlib import Path as FsPath

from . import props
from .action import alpha, compress, dom, is_normalizer, isolate, ran
from .errors import LeavittError, ParseError
from .graph import Graph
from .iso import (groupoid_iso_from_pi, homomorphism_violations, pi_from_groupoid_iso,
                  random_composable_pairs, sample_arrow_violations, validate_pi)
from .literals import (format_iso, load_graph, load_iso, load_omega, parse_arrow, parse_class,
                       parse_element, parse_lasso)
from .rings import ring_named
from .steinberg import format_coefficient, format_element
from .stone import check_kappa_linearity, kappa_iff_violations
from .weyl import WeylClass, equivalent, phi, phi_inverse

VERBS = ("nf", "mul", "add", "star", "deg", "isdiag", "isnorm", "alpha", "dom", "ran",
         "compress", "weyl-eq", "phi", "phi-inv", "kappa", "stone-check", "verify-iso",
         "induce-groupoid-iso", "pi-from-omega", "check-props")

ARITY = {"nf": 1, "mul": 2, "add": 2, "star": 1, "deg": 1, "isdiag": 1, "isnorm": 1,
         "alpha": 1, "dom": 1, "ran": 1, "compress": 1, "weyl-eq": 4, "phi": 1,
         "kappa": 1, "stone-check": 0, "verify-iso": 0, "induce-groupoid-iso": 0,
         "pi-from-omega": 1, "check-props": 0}


class Failed(Exception):
    """A verdict of 'no'; carries the text already printed."""


def data_dir() -> FsPath:
    return FsPath(str(resources.files("leavitt") / "data"))


def resolve_graph(ref: str) -> Graph:
    """A graph file, or the name of a bundled graph such as ``g_2loop``."""
    p = FsPath(ref)
    if not p.exists():
        bundled = data_dir() / f"{ref}.graph"
        if bundled.exists():
            p = bundled
        else:
            raise ParseError(f"no graph file {ref!r}")
    g = load_graph(p)
    g.validate()
    return g


def resolve_file(ref: str, suffix: str) -> FsPath:
    p = FsPath(ref)
    if p.exists():
        return p
    bundled = data_dir() / f"{ref}{suffix}"
    if bundled.exists():
        return bundled
    raise ParseError(f"no file {ref!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="leavitt",
        description="Exact computations in Leavitt path algebras of finite graphs.",
        epilog="Literals starting with '-' may need quoting with a leading space or '--'.")
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("args", nargs="*", help="element, lasso, arrow or file arguments")
    ap.add_argument("--graph", help="graph file or bundled graph name")
    ap.add_argument("--ring", choices=("int", "gauss"), default=None)
    ap.add_argument("--depth", type=int, default=None)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--spec", help="isomorphism spec file or bundled spec name")
    ap.add_argument("--at", help="lasso at which to evaluate")
    ap.add_argument("--suite", default="all", help="property suite for check-props")
    ap.add_argument("--count", type=int, default=20, help="samples per property")
    return ap


_LITERAL = re.compile(r"^-[\d(\[]")


def _protect(argv: list[str]) -> list[str]:
    # argparse reads "-1*[a|b]" as an option; a leading space makes it positional
    return [" " + a if _LITERAL.match(a) else a for a in argv]


def _need(args, n: int) -> None:
    if len(args.args) != n:
        raise ParseError(f"{args.verb} takes {n} argument{'s' if n != 1 else ''}, got {len(args.args)}")


def _graph(args) -> Graph:
    if not args.graph:
        raise ParseError(f"{args.verb} needs --graph")
    return resolve_graph(args.graph)


def _spec(args):
    if not args.spec:
        raise ParseError(f"{args.verb} needs --spec")
    return load_iso(resolve_file(args.spec, ".iso"))


def _set(paths) -> str:
    return "{" + ", ".join(str(p) for p in sorted(paths, key=lambda p: p.sort_key())) + "}"


def run(argv: list[str], out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(_protect(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        lines = dispatch(args)
        code = 0
    except Failed as exc:
        lines = exc.args[0]
        code = 1
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LeavittError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for line in lines:
        print(line, file=out)
    return code


def _verdict(ok: bool, lines: list[str]) -> list[str]:
    if not ok:
        raise Failed(lines)
    return lines


def dispatch(args) -> list[str]:
    verb = args.verb
    if verb in ARITY and verb != "compress":
        _need(args, ARITY[verb])
    if verb in ("verify-iso", "kappa", "stone-check", "induce-groupoid-iso"):
        return spec_verb(args)
    if verb == "pi-from-omega":
        return pi_from_omega(args)
    if verb == "check-props":
        g = _graph(args)
        ring = ring_named(args.ring or "int")
        results = props.run_suite(args.suite, g, ring, args.seed, args.count)
        header = f"check-props suite={args.suite} graph={g.name} ring={ring.name} seed={args.seed}"
        text = props.format_report(results, header).splitlines()
        return _verdict(all(r.passed for _, r in results), text)

    g = _graph(args)
    ring = ring_named(args.ring or "int")
    elem = lambda text: parse_element(g, text, ring)  # noqa: E731
    if verb == "nf":
        f = elem(args.args[0])
        return [format_element(f.refine(1 if args.depth is None else args.depth))]
    if verb == "mul":
        return [format_element(elem(args.args[0]) * elem(args.args[1]))]
    if verb == "add":
        return [format_element(elem(args.args[0]) + elem(args.args[1]))]
    if verb == "star":
        return [format_element(elem(args.args[0]).star())]
    if verb == "deg":
        k = elem(args.args[0]).degree()
        return ["Mixed" if k is None else f"Homogeneous({k})"]
    if verb == "isdiag":
        ok = elem(args.args[0]).is_diagonal()
        return _verdict(ok, [str(ok).lower()])
    if verb == "isnorm":
        ok = is_normalizer(elem(args.args[0]))
        return _verdict(ok, [str(ok).lower()])
    if verb in ("dom", "ran"):
        n = elem(args.args[0])
        return [_set(dom(n) if verb == "dom" else ran(n))]
    if verb == "alpha":
        pm = alpha(elem(args.args[0]))
        if args.at:
            return [str(pm(parse_lasso(g, args.at)))]
        return [str(pm)]
    if verb == "compress":
        _need(args, 1)
        if not args.at:
            raise ParseError("compress needs --at")
        c = compress(isolate(g, parse_lasso(g, args.at)), elem(args.args[0]))
        return ["0" if c is None else f"({format_coefficient(ring, c[0])}, {c[1]})"]
    if verb == "weyl-eq":
        n, x, m, x2 = args.args
        ok = equivalent(elem(n), parse_lasso(g, x), elem(m), parse_lasso(g, x2))
        return _verdict(ok, [str(ok).lower()])
    if verb == "phi":
        return [str(phi(parse_arrow(g, args.args[0]), g, ring))]
    if verb == "phi-inv":
        if len(args.args) == 1:
            c = parse_class(g, args.args[0], ring)
        else:
            _need(args, 2)
            c = WeylClass(elem(args.args[0]), parse_lasso(g, args.args[1]))
        return [str(phi_inverse(c))]
    raise ParseError(f"unhandled verb {verb}")  # pragma: no cover


def spec_verb(args) -> list[str]:
    spec = _spec(args)
    if args.verb == "verify-iso":
        report = validate_pi(spec, 4 if args.depth is None else args.depth)
        return _verdict(report.passed, str(report).splitlines())
    report = validate_pi(spec, 4)
    if not report.passed:
        raise Failed(str(report).splitlines())
    g = spec.source
    if args.verb == "kappa":
        x = parse_lasso(g, args.args[0])
        from .stone import induce_kappa

        return [str(induce_kappa(spec, x, args.depth))]
    if args.verb == "stone-check":
        depth = 3 if args.depth is None else args.depth
        points = g.lassos(4)[:20]
        lines, ok = [], True
        for x in points:
            kx = spec.kappa(x)
            bad = kappa_iff_violations(spec, x, depth, kx)
            ok &= not bad
            lines.append(f"{'PASS' if not bad else 'FAIL'} {x} -> {kx}" + (f": {bad[0]}" if bad else ""))
        linear = check_kappa_linearity(spec, depth, args.seed)
        lines.append(f"diagonal values preserved: {str(linear).lower()}")
        lines.append(f"{'PASS' if ok else 'FAIL'} kappa support law on {len(points)} points, "
                     f"compact opens of depth {depth}")
        return _verdict(ok, lines)
    # induce-groupoid-iso
    depth = 2 if args.depth is None else args.depth
    om = groupoid_iso_from_pi(spec, depth)
    lines = [f"Z({mu},{nu}) -> {format_element(img)}" for (mu, nu), img in om.table().items()]
    bad = homomorphism_violations(om, depth)
    pairs = random_composable_pairs(g, args.count, random.Random(args.seed), 3)
    bad_arrows = sample_arrow_violations(om, pairs)
    lines.append(f"{'PASS' if not bad else 'FAIL'} cylinder products to depth {depth}"
                 + (f": {bad[0]}" if bad else ""))
    lines.append(f"{'PASS' if not bad_arrows else 'FAIL'} {len(pairs)} composable arrow pairs"
                 + (f": {bad_arrows[0]}" if bad_arrows else ""))
    return _verdict(not bad and not bad_arrows, lines)


def pi_from_omega(args) -> list[str]:
    om, src_ref, tgt_ref = load_omega(resolve_file(args.args[0], ".omega"))
    spec = pi_from_groupoid_iso(om)
    report = validate_pi(spec, 4 if args.depth is None else args.depth)
    lines = format_iso(spec, src_ref, tgt_ref).splitlines()
    lines.append(f"# validate_pi: {'PASS' if report.passed else 'FAIL'}")
    return _verdict(report.passed, lines)


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
