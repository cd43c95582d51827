"""Seeded random generators for paths, arrows and algebra elements."""

from __future__ import annotations

import random

from .action import is_normalizer
from .graph import Arrow, Graph, Lasso, Path
from .rings import ZZ, Gaussian, Ring
from .steinberg import Element


def random_scalar(ring: Ring, rng: random.Random, nonzero: bool = True):
    if ring is ZZ:
        pool = [-3, -2, -1, 1, 2, 3] if nonzero else [-2, -1, 0, 1, 2]
        return rng.choice(pool)
    while True:
        z = Gaussian(rng.randint(-2, 2), rng.randint(-2, 2))
        if z or not nonzero:
            return z


def random_path(graph: Graph, rng: random.Random, length: int, source: str | None = None,
                range_: str | None = None) -> Path | None:
    pool = [p for p in graph.paths(length)
            if (source is None or p.source == source) and (range_ is None or p.range == range_)]
    return rng.choice(pool) if pool else None


def random_lasso(graph: Graph, rng: random.Random, max_size: int = 4, at: str | None = None) -> Lasso:
    pool = graph.lassos(max_size, at)
    if not pool:
        pool = graph.lassos(max_size + len(graph.vertices) + 2, at)
    return rng.choice(pool)


def random_arrow(graph: Graph, rng: random.Random, max_size: int = 4,
                 range_at: Lasso | None = None, max_len: int = 2) -> Arrow:
    """A random groupoid element, optionally with prescribed range."""
    if range_at is None:
        z = random_lasso(graph, rng, max_size)
        mu = random_path(graph, rng, rng.randint(0, max_len), source=z.range) or graph.vertex(z.range)
        nu = random_path(graph, rng, rng.randint(0, max_len), source=z.range) or graph.vertex(z.range)
        return Arrow(z.prepend(mu), len(mu) - len(nu), z.prepend(nu))
    x = range_at
    m = rng.randint(0, max_len)
    z = x.shift(m)
    nu = random_path(graph, rng, rng.randint(0, max_len), source=z.range) or graph.vertex(z.range)
    return Arrow(x, m - len(nu), z.prepend(nu))


def random_cylinder_sum(graph: Graph, ring: Ring, rng: random.Random, terms: int = 3,
                        max_len: int = 2) -> Element:
    """An arbitrary element: a few cylinders with random coefficients."""
    triples = []
    for _ in range(rng.randint(1, terms)):
        nu = random_path(graph, rng, rng.randint(0, max_len))
        mu = random_path(graph, rng, rng.randint(0, max_len), source=nu.source) or graph.vertex(nu.source)
        triples.append((mu, nu, random_scalar(ring, rng)))
    return Element.from_terms(graph, triples, ring)


def _antichain(graph: Graph, rng: random.Random, candidates: list[Path], size: int) -> list[Path]:
    rng.shuffle(candidates)
    out: list[Path] = []
    for p in candidates:
        if len(out) == size:
            break
        if all(p.extends(q) is None and q.extends(p) is None for q in out):
            out.append(p)
    return out


def random_bisection(graph: Graph, ring: Ring, rng: random.Random, pieces: int = 3,
                     max_len: int = 2) -> Element:
    """``sum r_i 1_{Z(mu_i, nu_i)}`` with the ``nu_i`` and the ``mu_i`` each pairwise
    incomparable, so the support is a bisection and the sum normalizes the diagonal."""
    nus = _antichain(graph, rng, list(graph.paths_upto(max_len)), rng.randint(1, pieces))
    taken: list[Path] = []
    triples = []
    for nu in nus:
        options = [p for p in graph.paths_upto(max_len) if p.source == nu.source
                   and all(p.extends(q) is None and q.extends(p) is None for q in taken)]
        if not options:
            continue
        mu = rng.choice(options)
        taken.append(mu)
        triples.append((mu, nu, random_scalar(ring, rng)))
    return Element.from_terms(graph, triples, ring)


def random_diagonal(graph: Graph, ring: Ring, rng: random.Random, max_len: int = 2) -> Element:
    units = _antichain(graph, rng, list(graph.paths_upto(max_len)), rng.randint(1, 3))
    return Element.diagonal(graph, [(p, random_scalar(ring, rng)) for p in units], ring)


def random_normalizer(graph: Graph, ring: Ring, rng: random.Random, max_len: int = 2) -> Element:
    """A bisection sum, a product of two, or a diagonal element; always a normalizer."""
    kind = rng.random()
    if kind < 0.2:
        n = random_diagonal(graph, ring, rng, max_len)
    elif kind < 0.45:
        n = random_bisection(graph, ring, rng, max_len=max_len) * \
            random_bisection(graph, ring, rng, max_len=max_len)
    else:
        n = random_bisection(graph, ring, rng, max_len=max_len)
    if not n.terms or not is_normalizer(n):
        return random_normalizer(graph, ring, rng, max_len)
    return n


def random_normalizer_at(graph: Graph, ring: Ring, rng: random.Random, x: Lasso,
                         max_len: int = 2, tries: int = 200) -> Element:
    """A random normalizer whose domain contains ``x``."""
    from .action import dom

    for _ in range(tries):
        n = random_normalizer(graph, ring, rng, max_len)
        if any(x.extends(p) for p in dom(n)):
            return n
    k = rng.randint(0, max_len)
    nu = x.head(k)
    mu = random_path(graph, rng, rng.randint(0, max_len), source=nu.source) or graph.vertex(nu.source)
    return Element.cylinder(graph, mu, nu, random_scalar(ring, rng), ring)
