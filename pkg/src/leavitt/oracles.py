"""Brute-force reference computations used to cross-check the fast paths.

Each function here recomputes something from first principles: unrolled
sequences instead of canonical forms, pointwise sums over the groupoid
instead of the cylinder product rule, and exhaustive sampling instead of
depth bounds. They are slow and only meant for tests and property suites.
"""

from __future__ import annotations

from math import lcm

from .action import alpha, conjugates_diagonal_at, normalizer_depth
from .graph import Arrow, Graph, Lasso, Path
from .steinberg import Element


def unroll_equal(x: Lasso, y: Lasso) -> bool:
    n = len(x.prefix) + len(y.prefix) + 2 * lcm(len(x.cycle), len(y.cycle))
    return x.range == y.range and x.unroll(n) == y.unroll(n)


def unroll_lag_equivalent(x: Lasso, k: int, y: Lasso, depth: int | None = None) -> bool:
    """``x_{i+k} == y_i`` for every ``i`` in a late window, read off unrollings."""
    start = len(x.prefix) + len(y.prefix) + abs(k)
    span = depth or 2 * lcm(len(x.cycle), len(y.cycle)) + 2
    if start + k < 0:
        start = -k
    xs = x.unroll(start + k + span)
    ys = y.unroll(start + span)
    return all(xs[i + k] == ys[i] for i in range(start, start + span))


def arrows_out_of_support(f: Element, x: Lasso) -> list[tuple[Arrow, object]]:
    """Every arrow of ``supp(f)`` with range ``x``, with its coefficient."""
    out = []
    for mu, nu, r in f.items():
        if x.extends(mu):
            out.append((Arrow(x, len(mu) - len(nu), x.shift(len(mu)).prepend(nu)), r))
    return out


def pointwise_product(f: Element, g: Element, gamma: Arrow):
    """``(f * g)(gamma) = sum over r(eta) = r(gamma) of f(eta) g(eta^-1 gamma)``."""
    ring = f.ring
    total = ring.zero
    for eta, r in arrows_out_of_support(f, gamma.x):
        rest = Arrow(eta.y, gamma.lag - eta.lag, gamma.y)
        total = ring.add(total, ring.mul(r, g.evaluate(rest)))
    return total


def sample_arrows(f: Element, extra: int = 3) -> list[Arrow]:
    """Arrows through every term of ``f`` plus a few unit arrows, for pointwise checks."""
    g = f.graph
    out = []
    for mu, nu, _ in f.items():
        z = g.first_lasso(mu.source)
        out.append(Arrow(z.prepend(mu), len(mu) - len(nu), z.prepend(nu)))
    for x in g.lassos(2)[:extra]:
        out.append(Arrow(x, 0, x))
    return out


def normalizer_by_depths(n: Element, extra: int = 3) -> list[bool]:
    """The depth test at ``L*``, ``L*+1``, ..., ``L*+extra``."""
    if not n.terms:
        return [True] * (extra + 1)
    base = normalizer_depth(n)
    return [conjugates_diagonal_at(n, base + j) for j in range(extra + 1)]


def lassos_in(graph: Graph, tau: Path, max_size: int) -> list[Lasso]:
    """``tau z`` for every lasso ``z`` at ``s(tau)`` with ``size(z) <= max_size``."""
    return [z.prepend(tau) for z in graph.lassos(max_size, tau.source)]


def germs_agree(n: Element, m: Element, x: Lasso, max_size: int = 8, slack: int = 2) -> bool:
    """Whether ``alpha_n`` and ``alpha_m`` agree near ``x``, by comparing them on every
    lasso of size ``<= max_size`` inside ``Z(x(0, d))`` for ``d`` from the rule
    depth up to ``slack`` more."""
    g = n.graph
    an, am = alpha(n), alpha(m)
    base = max(len(an.rule_for(x)[0]), len(am.rule_for(x)[0]))
    for d in range(base, base + slack + 1):
        tau = x.head(d)
        points = lassos_in(g, tau, max_size)
        if all(z in an and z in am and an(z) == am(z) for z in points):
            return True
    return False


def isolated_equivalent(n: Element, m: Element, x: Lasso) -> bool:
    """The isolated clause: same image and ``(n* m)(x, 0, x) != 0``."""
    an, am = alpha(n), alpha(m)
    if an(x) != am(x):
        return False
    value = pointwise_product(n.star(), m, Arrow(x, 0, x))
    return not n.ring.is_zero(value)
