"""Normalizers of the diagonal, their partial action on the path space, and
compression by isolated points."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InconsistentAction,
    MalformedCompression,
    NotANormalizer,
    NotIsolated,
    NotZeroGraded,
    OutsideDomain,
)
from .graph import Graph, Lasso, Path
from .steinberg import Element

_NORMALIZER_CACHE: dict[tuple, bool] = {}
_DOM_CACHE: dict[tuple, frozenset] = {}
_ALPHA_CACHE: dict[tuple, PartialMap] = {}


def normalizer_depth(n: Element) -> int:
    """The depth ``l + 2 * max|mu|`` at which conjugation is tested."""
    return n.depth + 2 * n.max_mu()


def conjugates_diagonal_at(n: Element, depth: int) -> bool:
    """Whether ``n 1_{Z(t)} n*`` and ``n* 1_{Z(t)} n`` are diagonal for every ``|t| == depth``."""
    g, ring = n.graph, n.ring
    ns = n.star()
    for tau in g.paths(depth):
        p = Element.cylinder(g, tau, tau, ring.one, ring)
        if not (n * p * ns).is_diagonal():
            return False
        if not (ns * p * n).is_diagonal():
            return False
    return True


def finite_cylinder_points(graph: Graph, tau: Path) -> list[Lasso] | None:
    """All points of ``Z(tau)`` when there are finitely many (all isolated), else None."""
    singles = graph._memo.get("singleton-vertices")
    if singles is None:
        singles = frozenset(v for v in graph.vertices
                            if graph.is_singleton_cylinder(graph.vertex(v)))
        graph._memo["singleton-vertices"] = singles
    out: list[Lasso] = []

    def walk(path: Path, on_stack: frozenset[str]) -> bool:
        v = path.source
        if v in singles:
            out.append(graph.first_lasso(v).prepend(path))
            return True
        if v in on_stack:
            return False
        return all(walk(path + graph.edge(e), on_stack | {v}) for e in graph.in_edges(v))

    return out if walk(tau, frozenset()) else None


def _comparable(mu: Path, nu: Path) -> Path | None:
    """The longer of two comparable paths, or None."""
    if mu.extends(nu) is not None:
        return mu
    if nu.extends(mu) is not None:
        return nu
    return None


def is_normalizer_structural(n: Element) -> bool:
    """Exact test read off the normal form.

    At a point ``y`` of ``Z(nu)`` the arrows of ``supp(n)`` with source ``y``
    come from the terms over ``nu``. Two of them give an off-diagonal arrow
    of ``n d n*`` that nothing else can cancel except at finitely many
    eventually periodic ``y``, so a second term over ``nu`` is only allowed
    when ``Z(nu)`` is a finite set of isolated points, where the conjugates of
    the point projections are checked directly. The range side is symmetric
    with comparable ``mu`` in place of equal ``nu``.
    """
    g, ring = n.graph, n.ring
    ns = n.star()
    by_nu: dict[Path, list[Path]] = {}
    for mu, nu in n.terms:
        by_nu.setdefault(nu, []).append(mu)
    checked_src: set[Lasso] = set()
    for nu, mus in by_nu.items():
        if len(mus) < 2:
            continue
        points = finite_cylinder_points(g, nu)
        if points is None:
            return False
        for y in points:
            if y in checked_src:
                continue
            checked_src.add(y)
            k = g.isolation_depth(y)
            p = Element.cylinder(g, y.head(k), y.head(k), ring.one, ring)
            if not (n * p * ns).is_diagonal():
                return False
    keys = sorted(n.terms, key=lambda t: (len(t[0]), t[0].sort_key(), t[1].sort_key()))
    checked_rng: set[Lasso] = set()
    for i, (mu, _) in enumerate(keys):
        for mu2, _ in keys[i + 1:]:
            longer = _comparable(mu, mu2)
            if longer is None:
                continue
            points = finite_cylinder_points(g, longer)
            if points is None:
                return False
            for x in points:
                if x in checked_rng:
                    continue
                checked_rng.add(x)
                k = g.isolation_depth(x)
                p = Element.cylinder(g, x.head(k), x.head(k), ring.one, ring)
                if not (ns * p * n).is_diagonal():
                    return False
    return True


def is_normalizer_bounded(n: Element) -> bool:
    """The depth-bounded test: conjugate every ``1_{Z(t)}`` with ``|t|`` equal to
    ``l + 2 max|mu|`` and one more."""
    if not n.terms:
        return True
    depth = normalizer_depth(n)
    return conjugates_diagonal_at(n, depth) and conjugates_diagonal_at(n, depth + 1)


def _memo(table: dict, n: Element, fn):
    """``fn(n)`` remembered by normal form; elements are immutable."""
    key = (n.graph, n.key())
    hit = table.get(key)
    if hit is None:
        hit = fn(n)
        if len(table) > 50000:
            table.clear()
        table[key] = hit
    return hit


def is_normalizer(n: Element) -> bool:
    if not n.terms:
        return True
    return _memo(_NORMALIZER_CACHE, n, is_normalizer_structural)


def _require(n: Element) -> None:
    if not is_normalizer(n):
        raise NotANormalizer(f"{n} does not normalize the diagonal")


def dom(n: Element, check: bool = True) -> frozenset[Path]:
    """``supp(n* n)`` as a set of cylinder prefixes.

    Whenever the support is a union of the cylinders ``Z(nu)`` over the
    normal form of ``n`` (always the case over the shipped rings) those
    ``nu`` are returned, so the answer sits at the normal form's length.
    """
    if check:
        _require(n)
    return _memo(_DOM_CACHE, n, _dom)


def _dom(n: Element) -> frozenset[Path]:
    g = n.graph
    support = (n.star() * n).support_units()
    nus = {nu for _, nu in n.terms}
    in_support = g.coverage(support)
    covered = frozenset(nu for nu in nus if in_support(nu))
    in_covered = g.coverage(covered)
    if all(in_covered(tau) for tau in support):
        return covered
    return support


def ran(n: Element, check: bool = True) -> frozenset[Path]:
    if check:
        _require(n)
    return dom(n.star(), check=False)


@dataclass(frozen=True)
class PartialMap:
    """A partial homeomorphism given by prefix rewrites ``nu0 z -> mu0 z``."""

    graph: Graph
    rules: tuple[tuple[Path, Path], ...]

    def rule_for(self, x: Lasso) -> tuple[Path, Path] | None:
        for nu0, mu0 in self.rules:
            if x.extends(nu0):
                return nu0, mu0
        return None

    def __contains__(self, x: Lasso) -> bool:
        return self.rule_for(x) is not None

    def __call__(self, x: Lasso) -> Lasso:
        rule = self.rule_for(x)
        if rule is None:
            raise OutsideDomain(f"{x} is outside the domain {self.domain_str()}")
        nu0, mu0 = rule
        return x.shift(len(nu0)).prepend(mu0)

    def inverse(self) -> PartialMap:
        return PartialMap(self.graph, _sorted_rules((mu0, nu0) for nu0, mu0 in self.rules))

    def domain(self) -> tuple[Path, ...]:
        return tuple(nu0 for nu0, _ in self.rules)

    def image(self) -> tuple[Path, ...]:
        return tuple(mu0 for _, mu0 in self.rules)

    def domain_str(self) -> str:
        return "{" + ", ".join(str(p) for p in self.domain()) + "}"

    def __str__(self) -> str:
        return "; ".join(f"{nu0} -> {mu0}" for nu0, mu0 in self.rules) or "(empty)"


def _sorted_rules(rules) -> tuple[tuple[Path, Path], ...]:
    return tuple(sorted(rules, key=lambda r: (r[0].sort_key(), r[1].sort_key())))


def alpha(n: Element, check: bool = True) -> PartialMap:
    """The partial action ``alpha_n`` as prefix rewrites, one per ``nu0`` in the normal form."""
    if check:
        _require(n)
    return _memo(_ALPHA_CACHE, n, _alpha)


def _alpha(n: Element) -> PartialMap:
    g = n.graph
    support = dom(n, check=False)
    by_nu: dict[Path, list[Path]] = {}
    for mu, nu in n.terms:
        by_nu.setdefault(nu, []).append(mu)
    rules = []
    in_support = g.coverage(support)
    for nu0 in sorted(by_nu, key=Path.sort_key):
        if not in_support(nu0):
            continue
        mus = sorted(by_nu[nu0], key=Path.sort_key)
        mu0 = mus[0]
        if len(mus) > 1:
            sample = g.first_lasso(nu0.source).prepend(nu0)
            want = sample.shift(len(nu0)).prepend(mu0)
            for mu in mus[1:]:
                got = sample.shift(len(nu0)).prepend(mu)
                if got != want:
                    raise InconsistentAction(f"terms [{mu0}|{nu0}] and [{mu}|{nu0}] move "
                                             f"{sample} to different points")
        rules.append((nu0, mu0))
    return PartialMap(g, tuple(rules))


def apply_alpha(pm: PartialMap, x: Lasso) -> Lasso:
    return pm(x)


def compose_diagonal(d: Element, pm: PartialMap) -> Element:
    """The diagonal element ``d o alpha``, supported on the domain of ``pm``."""
    weights = []
    units = d.support_units()
    for nu0, mu0 in pm.rules:
        for tau in units:
            c = d.terms[(tau, tau)]
            rest = tau.extends(mu0)
            if rest is not None:
                weights.append((nu0 + rest, c))
            elif mu0.extends(tau) is not None:
                weights.append((nu0, c))
    return Element.diagonal(d.graph, weights, d.ring)


@dataclass(frozen=True)
class IsolatedPoint:
    """An isolated path ``x`` with ``Z(x(0, depth)) == {x}``."""

    x: Lasso
    depth: int

    def prefix(self) -> Path:
        return self.x.head(self.depth)

    def projection(self, graph: Graph, ring) -> Element:
        """``p_x = 1_{Z(x(0, depth))}``."""
        mu = self.prefix()
        return Element.cylinder(graph, mu, mu, ring.one, ring)


def isolate(graph: Graph, x: Lasso) -> IsolatedPoint:
    k = graph.isolation_depth(x)
    if k is None:
        raise NotIsolated(f"{x} is not an isolated path")
    return IsolatedPoint(x, k)


def compress(ip: IsolatedPoint, n: Element):
    """``p_x n p_x`` as ``(coefficient, degree)``, or None when it vanishes."""
    p = ip.projection(n.graph, n.ring)
    c = p * n * p
    if not c.terms:
        return None
    if len(c.terms) != 1:
        raise MalformedCompression(f"p_x n p_x = {c} has {len(c.terms)} terms")
    (mu, nu), r = next(iter(c.terms.items()))
    return r, len(mu) - len(nu)


def compress_scalar(ip: IsolatedPoint, a: Element):
    if a.degree() != 0:
        raise NotZeroGraded(f"{a} is not homogeneous of degree 0")
    c = compress(ip, a)
    return a.ring.zero if c is None else c[0]
