"""Compact open sets of paths, the idempotents of the diagonal, and the path
homeomorphism induced by a diagonal preserving isomorphism."""

from __future__ import annotations

import random
from collections.abc import Iterable
from dataclasses import dataclass

from .action import alpha
from .errors import NoStabilization, NotIdempotent
from .graph import Graph, Lasso, Path
from .rings import ZZ, Gaussian, Ring
from .steinberg import Element


def _refine(graph: Graph, prefixes: Iterable[Path], depth: int) -> set[Path]:
    out: set[Path] = set()
    for p in prefixes:
        out.update(graph.extensions(p, depth - len(p)))
    return out


def _coarsen(graph: Graph, paths: set[Path]) -> tuple[Path, ...]:
    current = set(paths)
    depth = max((len(p) for p in current), default=0)
    for level in range(depth, 0, -1):
        parents = {p.head(level - 1) for p in current if len(p) == level}
        for parent in parents:
            kids = graph.extensions(parent, 1)
            if all(k in current for k in kids):
                current.difference_update(kids)
                current.add(parent)
    return tuple(sorted(current, key=Path.sort_key))


@dataclass(frozen=True)
class CompactOpen:
    """A finite union of cylinders ``Z(mu)``, stored as its coarsest antichain."""

    graph: Graph
    prefixes: tuple[Path, ...]

    @classmethod
    def of(cls, graph: Graph, prefixes: Iterable[Path]) -> CompactOpen:
        prefixes = list(prefixes)
        if not prefixes:
            return cls(graph, ())
        depth = max(len(p) for p in prefixes)
        return cls(graph, _coarsen(graph, _refine(graph, prefixes, depth)))

    @classmethod
    def empty(cls, graph: Graph) -> CompactOpen:
        return cls(graph, ())

    @classmethod
    def everything(cls, graph: Graph) -> CompactOpen:
        return cls.of(graph, [graph.vertex(v) for v in graph.vertices])

    def depth(self) -> int:
        return max((len(p) for p in self.prefixes), default=0)

    def at_depth(self, depth: int) -> set[Path]:
        return _refine(self.graph, self.prefixes, max(depth, self.depth()))

    def _pair(self, other: CompactOpen) -> tuple[set[Path], set[Path]]:
        d = max(self.depth(), other.depth())
        return self.at_depth(d), other.at_depth(d)

    def meet(self, other: CompactOpen) -> CompactOpen:
        a, b = self._pair(other)
        return CompactOpen(self.graph, _coarsen(self.graph, a & b))

    def join(self, other: CompactOpen) -> CompactOpen:
        a, b = self._pair(other)
        return CompactOpen(self.graph, _coarsen(self.graph, a | b))

    def difference(self, other: CompactOpen) -> CompactOpen:
        a, b = self._pair(other)
        return CompactOpen(self.graph, _coarsen(self.graph, a - b))

    def leq(self, other: CompactOpen) -> bool:
        return self.meet(other) == self

    def __contains__(self, x: Lasso) -> bool:
        return any(x.extends(p) for p in self.prefixes)

    def is_empty(self) -> bool:
        return not self.prefixes

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.prefixes) + "}"


def meet(a: CompactOpen, b: CompactOpen) -> CompactOpen:
    return a.meet(b)


def join(a: CompactOpen, b: CompactOpen) -> CompactOpen:
    return a.join(b)


def leq(a: CompactOpen, b: CompactOpen) -> bool:
    return a.leq(b)


def idempotent_to_set(d: Element) -> CompactOpen:
    one = d.ring.one
    if not d.is_diagonal() or any(r != one for r in d.terms.values()):
        raise NotIdempotent(f"{d} is not a projection in the diagonal")
    return CompactOpen.of(d.graph, d.support_units())


def set_to_idempotent(a: CompactOpen, ring: Ring = ZZ) -> Element:
    return Element.diagonal(a.graph, [(p, ring.one) for p in a.prefixes], ring)


@dataclass(frozen=True)
class FilterChain:
    """The ultrafilter of compact open neighbourhoods of ``x``, via its base ``Z(x(0, m))``."""

    x: Lasso

    def member(self, m: int) -> Path:
        return self.x.head(m)

    def __contains__(self, a: CompactOpen) -> bool:
        return self.x in a


def rho(x: Lasso) -> FilterChain:
    return FilterChain(x)


def rho_inverse(chain: FilterChain) -> Lasso:
    return chain.x


# -- the induced homeomorphism ---------------------------------------------

def default_depth_cap(graph: Graph, x: Lasso) -> int:
    return 4 * (len(graph.vertices) + len(graph.edges) + x.size)


def _fixed_point_candidates(pm) -> list[Lasso]:
    """Points fixed by a prefix rewrite rule of nonzero lag (one per such rule at most)."""
    out = []
    for nu0, mu0 in pm.rules:
        if len(mu0) > len(nu0):
            u = mu0.extends(nu0)
            if u is not None:
                out.append(Lasso.make(nu0, u))
        elif len(mu0) < len(nu0):
            u = nu0.extends(mu0)
            if u is not None:
                out.append(Lasso.make(mu0, u))
    return out


def induce_kappa(spec, x: Lasso, depth_cap: int | None = None) -> Lasso:
    """The image of ``x`` under the path homeomorphism induced by ``spec``.

    ``x = p c c ...`` is the unique fixed point of ``alpha_n`` for
    ``n = 1_{Z(pc, p)}``, so its image is a fixed point of ``alpha_{pi(n)}``.
    Those fixed points are finitely many lassos; the one lying in every
    ``supp pi(1_{Z(x(0, m))})`` is the answer.
    """
    g = spec.source
    cap = default_depth_cap(g, x) if depth_cap is None else depth_cap
    p, c = x.prefix, x.cycle
    ring = spec.ring
    n = Element.cylinder(g, p + c, p, ring.one, ring)
    candidates = _fixed_point_candidates(alpha(spec.extend(n)))
    for m in range(0, cap + 1):
        mu = x.head(m)
        image = spec.extend(Element.cylinder(g, mu, mu, ring.one, ring))
        candidates = [z for z in candidates if not ring.is_zero(image.value_at_unit(z))]
        if not candidates or (len(candidates) == 1 and m >= 1):
            break
    if len(candidates) != 1:
        raise NoStabilization(cap, f"{len(candidates)} candidate images remain for {x}")
    return candidates[0]


def kappa_iff_violations(spec, x: Lasso, depth: int, kx: Lasso | None = None) -> list[str]:
    """Check ``x in L <=> kappa(x) in supp(pi(1_L))`` for every compact open ``L``
    that is a union of depth-``depth`` cylinders (all ``2^k`` of them)."""
    g = spec.source
    kx = induce_kappa(spec, x) if kx is None else kx
    ring = spec.ring
    paths = g.paths(depth)
    values = []
    for tau in paths:
        img = spec.extend(Element.cylinder(g, tau, tau, ring.one, ring))
        values.append(img.value_at_unit(kx))
    inside = [x.extends(tau) for tau in paths]
    bad = []
    k = len(paths)
    sums = [ring.zero] * (1 << k)
    member = [False] * (1 << k)
    for mask in range(1, 1 << k):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        sums[mask] = ring.add(sums[rest], values[low])
        member[mask] = member[rest] or inside[low]
        if member[mask] == ring.is_zero(sums[mask]):
            bad.append("{" + ", ".join(str(paths[i]) for i in range(k) if mask >> i & 1) + "}")
            if len(bad) > 5:
                break
    return bad


def _random_scalar(ring: Ring, rng: random.Random):
    if ring is ZZ:
        return rng.choice([-3, -2, -1, 1, 2, 3])
    return rng.choice([Gaussian(0, 1), Gaussian(0, -1), Gaussian(1, 1), Gaussian(2, -1), Gaussian(1, 0)])


def random_diagonal(graph: Graph, ring: Ring, depth: int, rng: random.Random) -> Element:
    k = rng.randint(0, depth)
    chosen = [p for p in graph.paths(k) if rng.random() < 0.5]
    return Element.diagonal(graph, [(p, _random_scalar(ring, rng)) for p in chosen], ring)


def check_kappa_linearity(spec, depth: int, seed: int = 0, samples: int = 20) -> bool:
    """Whether ``pi(d) o kappa == d`` on sampled lassos for sampled diagonal ``d``."""
    g = spec.source
    rng = random.Random(seed)
    points = list(g.lassos(max(depth, 2)))
    kappa = {x: induce_kappa(spec, x) for x in points}
    ring = spec.ring
    generic = Gaussian(0, 1) if ring is not ZZ else 2
    probes = [Element.vertex(g, v, ring).scale(generic) for v in g.vertices]
    probes += [random_diagonal(g, ring, depth, rng) for _ in range(samples)]
    for d in probes:
        image = spec.extend(d)
        for x in points:
            if d.value_at_unit(x) != image.value_at_unit(kappa[x]):
                return False
    return True
