"""The Steinberg algebra of the graph groupoid.

An element is a finite sum ``sum r * 1_{Z(mu, nu)}`` kept in normal form:
every ``nu`` has the same length (the largest one present), keys are
distinct and no coefficient is zero. Shorter terms are refined with the
relation ``1_{Z(mu, nu)} = sum_e 1_{Z(mu e, nu e)}`` over ``e`` in
``r^{-1}(s(nu))``, which always exists because graphs have no sources.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable

from .errors import MixedRings, NotDiagonal, SourceMismatch
from .graph import Arrow, Graph, Path
from .rings import Gaussian, Ring, ZZ

Key = tuple[Path, Path]


def _term_sort_key(key: Key) -> tuple:
    mu, nu = key
    return (nu.sort_key(), mu.sort_key())


class Element:
    """A normalized element of the Steinberg algebra over ``ring``."""

    __slots__ = ("graph", "ring", "terms", "depth", "_hashkey")

    def __init__(self, graph: Graph, ring: Ring, terms: dict[Key, object], depth: int) -> None:
        # Trusted constructor: ``terms`` must already be normalized at ``depth``.
        self.graph = graph
        self.ring = ring
        self.terms = terms
        self.depth = depth
        self._hashkey = None

    __hash__ = None  # type: ignore[assignment]

    # -- construction ------------------------------------------------------

    @classmethod
    def from_terms(cls, graph: Graph, triples: Iterable[tuple[Path, Path, object]],
                   ring: Ring = ZZ, depth: int = 0) -> Element:
        triples = list(triples)
        for mu, nu, _ in triples:
            if mu.source != nu.source:
                raise SourceMismatch(f"s({mu}) = {mu.source} but s({nu}) = {nu.source}")
        return _normalize(graph, ring, triples, depth)

    @classmethod
    def zero(cls, graph: Graph, ring: Ring = ZZ) -> Element:
        return cls(graph, ring, {}, 0)

    @classmethod
    def cylinder(cls, graph: Graph, mu: Path, nu: Path, coeff=1, ring: Ring = ZZ) -> Element:
        return cls.from_terms(graph, [(mu, nu, coeff)], ring)

    @classmethod
    def vertex(cls, graph: Graph, v: str, ring: Ring = ZZ) -> Element:
        p = graph.vertex(v)
        return cls.from_terms(graph, [(p, p, ring.one)], ring)

    @classmethod
    def edge(cls, graph: Graph, e: str, ring: Ring = ZZ) -> Element:
        return cls.from_terms(graph, [(graph.edge(e), graph.vertex(graph.s(e)), ring.one)], ring)

    @classmethod
    def ghost(cls, graph: Graph, e: str, ring: Ring = ZZ) -> Element:
        return cls.from_terms(graph, [(graph.vertex(graph.s(e)), graph.edge(e), ring.one)], ring)

    @classmethod
    def diagonal(cls, graph: Graph, weights: Iterable[tuple[Path, object]], ring: Ring = ZZ) -> Element:
        return cls.from_terms(graph, [(mu, mu, r) for mu, r in weights], ring)

    # -- basic queries -----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> list[tuple[Path, Path, object]]:
        """Terms as ``(mu, nu, coeff)`` in printing order."""
        return [(mu, nu, self.terms[(mu, nu)]) for mu, nu in sorted(self.terms, key=_term_sort_key)]

    def max_mu(self) -> int:
        return max((len(mu) for mu, _ in self.terms), default=0)

    def _check(self, other: Element) -> None:
        if self.ring is not other.ring:
            raise MixedRings(f"cannot combine {self.ring.name} and {other.ring.name} elements")
        if self.graph is not other.graph and self.graph != other.graph:
            raise ValueError("elements live over different graphs")

    def refine(self, depth: int) -> Element:
        """The same element with every ``nu`` extended to length ``depth``."""
        if depth <= self.depth or not self.terms:
            return self
        return _normalize(self.graph, self.ring,
                          [(mu, nu, r) for (mu, nu), r in self.terms.items()], depth)

    def key(self) -> tuple:
        """A hashable fingerprint of the stored form (equal keys imply equal elements)."""
        if self._hashkey is None:
            self._hashkey = (self.ring.name, self.depth,
                             tuple((mu.edges, mu.range, nu.edges, nu.range, r)
                                   for mu, nu, r in self.items()))
        return self._hashkey

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        d = max(self.depth, other.depth)
        return self.refine(d).terms == other.refine(d).terms

    # -- arithmetic --------------------------------------------------------

    def add(self, other: Element) -> Element:
        self._check(other)
        triples = [(mu, nu, r) for (mu, nu), r in self.terms.items()]
        triples += [(mu, nu, r) for (mu, nu), r in other.terms.items()]
        return _normalize(self.graph, self.ring, triples, 0)

    def __add__(self, other: Element) -> Element:
        return self.add(other)

    def __neg__(self) -> Element:
        ring = self.ring
        return Element(self.graph, ring, {k: ring.neg(r) for k, r in self.terms.items()}, self.depth)

    def __sub__(self, other: Element) -> Element:
        return self.add(-other)

    def scale(self, c) -> Element:
        ring = self.ring
        c = ring.coerce(c)
        if ring.is_zero(c):
            return Element.zero(self.graph, ring)
        return Element(self.graph, ring, {k: ring.mul(c, r) for k, r in self.terms.items()}, self.depth)

    def __rmul__(self, c) -> Element:
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.mul(other)
        return self.scale(other)

    def mul(self, other: Element) -> Element:
        self._check(other)
        if not self.terms or not other.terms:
            return Element.zero(self.graph, self.ring)
        ring = self.ring
        lf = self.depth
        long_heads: dict[Path, list] = defaultdict(list)
        short: dict[Path, list] = defaultdict(list)
        short_lengths: set[int] = set()
        for (beta, gamma), s in other.terms.items():
            if len(beta) >= lf:
                long_heads[beta.head(lf)].append((beta, gamma, s))
            else:
                short[beta].append((beta, gamma, s))
                short_lengths.add(len(beta))
        out = []
        for (mu, nu), r in self.terms.items():
            # beta = nu beta'  ->  Z(mu beta', gamma)
            for beta, gamma, s in long_heads.get(nu, ()):
                out.append((mu + beta.sub(lf, len(beta)), gamma, ring.mul(r, s)))
            # nu = beta nu'  ->  Z(mu, gamma nu')
            for k in short_lengths:
                for beta, gamma, s in short.get(nu.head(k), ()):
                    out.append((mu, gamma + nu.sub(k, lf), ring.mul(r, s)))
        return _normalize(self.graph, ring, out, 0)

    def star(self) -> Element:
        ring = self.ring
        return _normalize(self.graph, ring,
                          [(nu, mu, ring.conj(r)) for (mu, nu), r in self.terms.items()], 0)

    def map_coefficients(self, fn) -> Element:
        ring = self.ring
        return _normalize(self.graph, ring, [(mu, nu, fn(r)) for (mu, nu), r in self.terms.items()],
                          self.depth)

    # -- grading and the diagonal -----------------------------------------

    def degrees(self) -> set[int]:
        return {len(mu) - len(nu) for mu, nu in self.terms}

    def degree(self) -> int | None:
        """The common degree of all terms, 0 for the zero element, None if mixed."""
        ds = self.degrees()
        if not ds:
            return 0
        return ds.pop() if len(ds) == 1 else None

    def component(self, k: int) -> Element:
        terms = {key: r for key, r in self.terms.items() if len(key[0]) - len(key[1]) == k}
        return Element(self.graph, self.ring, terms, self.depth if terms else 0)

    def is_diagonal(self) -> bool:
        return all(mu == nu for mu, nu in self.terms)

    def support_units(self) -> frozenset[Path]:
        if not self.is_diagonal():
            raise NotDiagonal(f"{self} has off-diagonal terms")
        return frozenset(mu for mu, _ in self.terms)

    # -- as a function on the groupoid ------------------------------------

    def evaluate(self, g: Arrow):
        total = self.ring.zero
        for (mu, nu), r in self.terms.items():
            if (g.lag == len(mu) - len(nu) and g.x.extends(mu) and g.y.extends(nu)
                    and g.x.shift(len(mu)) == g.y.shift(len(nu))):
                total = self.ring.add(total, r)
        return total

    def value_at_unit(self, x):
        """``f((x, 0, x))`` for a lasso ``x``."""
        total = self.ring.zero
        for (mu, nu), r in self.terms.items():
            if mu == nu and x.extends(mu):
                total = self.ring.add(total, r)
        return total

    # -- display -----------------------------------------------------------

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"Element({self})"


def format_coefficient(ring: Ring, r) -> str:
    text = ring.format(r)
    if isinstance(r, Gaussian) and r.re and r.im:
        return f"({text})"
    return text


def format_element(f: Element) -> str:
    if not f.terms:
        return "0"
    return " + ".join(f"{format_coefficient(f.ring, r)}*[{mu}|{nu}]" for mu, nu, r in f.items())


def _normalize(graph: Graph, ring: Ring, triples: list, depth: int) -> Element:
    triples = [(mu, nu, ring.coerce(r)) for mu, nu, r in triples]
    triples = [t for t in triples if not ring.is_zero(t[2])]
    if not triples:
        return Element(graph, ring, {}, 0)
    depth = max(depth, max(len(nu) for _, nu, _ in triples))
    acc: dict[Key, object] = {}
    for mu, nu, r in triples:
        k = depth - len(nu)
        if k == 0:
            keys = [(mu, nu)]
        else:
            keys = [(mu + tau, nu + tau) for tau in graph.paths_from(nu.source, k)]
        for key in keys:
            if key in acc:
                acc[key] = ring.add(acc[key], r)
            else:
                acc[key] = r
    terms = {k: r for k, r in acc.items() if not ring.is_zero(r)}
    return Element(graph, ring, terms, depth if terms else 0)


# Functional aliases matching the operation names used by the CLI.

def from_terms(graph: Graph, triples, ring: Ring = ZZ) -> Element:
    return Element.from_terms(graph, triples, ring)


def mul(f: Element, g: Element) -> Element:
    return f.mul(g)


def add(f: Element, g: Element) -> Element:
    return f.add(g)


def scalar_mul(r, f: Element) -> Element:
    return f.scale(r)


def star(f: Element) -> Element:
    return f.star()


def degree(f: Element) -> int | None:
    return f.degree()


def homogeneous_component(f: Element, k: int) -> Element:
    return f.component(k)


def is_diagonal(f: Element) -> bool:
    return f.is_diagonal()


def support_units(f: Element) -> frozenset[Path]:
    return f.support_units()


def evaluate(f: Element, g: Arrow):
    return f.evaluate(g)


def leavitt_family(graph: Graph, ring: Ring = ZZ):
    """The canonical generators ``(p, s, s*)`` as dictionaries keyed by vertex/edge id."""
    p = {v: Element.vertex(graph, v, ring) for v in graph.vertices}
    s = {e: Element.edge(graph, e, ring) for e in graph.edges}
    t = {e: Element.ghost(graph, e, ring) for e in graph.edges}
    return p, s, t


def path_element(graph: Graph, mu: Path, ring: Ring = ZZ) -> Element:
    """``s_mu = 1_{Z(mu, s(mu))}``."""
    return Element.cylinder(graph, mu, graph.vertex(mu.source), ring.one, ring)


def leavitt_violations(graph: Graph, p: dict, s: dict, t: dict) -> list[tuple[str, str]]:
    """Check (L1)-(L4) for a family of elements; returns ``(relation, witness)`` pairs."""
    bad: list[tuple[str, str]] = []
    vs, es = graph.vertices, graph.edges
    for v in vs:
        for w in vs:
            prod = p[v] * p[w]
            want = p[v] if v == w else p[v] - p[v]
            if prod != want:
                bad.append(("L1", f"p_{v} p_{w} = {prod}"))
    for e in es:
        r, so = graph.r(e), graph.s(e)
        if p[r] * s[e] != s[e] or s[e] * p[so] != s[e]:
            bad.append(("L2", f"s_{e}"))
        if p[so] * t[e] != t[e] or t[e] * p[r] != t[e]:
            bad.append(("L2", f"s_{e}*"))
    for e in es:
        for f in es:
            prod = t[e] * s[f]
            want = p[graph.s(e)] if e == f else prod - prod
            if prod != want:
                bad.append(("L3", f"s_{e}* s_{f} = {prod}"))
    for v in vs:
        total = p[v] - p[v]
        for e in graph.in_edges(v):
            total = total + s[e] * t[e]
        if total != p[v]:
            bad.append(("L4", f"sum over r^-1({v}) of s_e s_e* = {total}"))
    return bad
