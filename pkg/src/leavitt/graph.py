"""Directed graphs, finite paths, eventually periodic infinite paths and the
graph groupoid built from them.

Paths follow the Leavitt path algebra convention: a path ``mu_1 mu_2 ...``
satisfies ``s(mu_i) == r(mu_{i+1})`` and is read starting from its range.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass

from .errors import (
    GraphFormatError,
    Mismatch,
    NotACycle,
    NotComposable,
    SourceMismatch,
    SourceVertex,
)


@dataclass(frozen=True, slots=True)
class Path:
    """A finite path, stored with the vertices it passes through.

    ``verts[i]`` is ``r(edges[i])`` and ``verts[-1]`` is the source, so a
    length-0 path is just its anchor vertex.
    """

    edges: tuple[str, ...]
    verts: tuple[str, ...]

    @property
    def range(self) -> str:
        return self.verts[0]

    @property
    def source(self) -> str:
        return self.verts[-1]

    @property
    def is_vertex(self) -> bool:
        return not self.edges

    def __len__(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return ".".join(self.edges) if self.edges else self.verts[0]

    def __repr__(self) -> str:
        return f"Path({self})"

    def sort_key(self) -> tuple:
        return (self.edges, self.verts[0])

    def __add__(self, other: Path) -> Path:
        if self.source != other.range:
            raise Mismatch(f"cannot concatenate {self} and {other}: "
                           f"s = {self.source} but r = {other.range}")
        return Path(self.edges + other.edges, self.verts + other.verts[1:])

    def sub(self, i: int, j: int) -> Path:
        return Path(self.edges[i:j], self.verts[i:j + 1])

    def head(self, k: int) -> Path:
        return self.sub(0, k)

    def extends(self, prefix: Path) -> Path | None:
        """Return ``rest`` with ``self == prefix + rest``, or None."""
        k = len(prefix.edges)
        if k > len(self.edges) or self.verts[0] != prefix.verts[0]:
            return None
        if self.edges[:k] != prefix.edges:
            return None
        return self.sub(k, len(self.edges))


def concat(mu: Path, nu: Path) -> Path:
    return mu + nu


def _primitive_root(cycle: Path) -> Path:
    n = len(cycle)
    for d in range(1, n):
        if n % d == 0 and cycle.edges == cycle.edges[:d] * (n // d):
            return cycle.sub(0, d)
    return cycle


@dataclass(frozen=True, slots=True)
class Lasso:
    """The infinite path ``prefix cycle cycle ...`` in canonical form.

    Canonical means the cycle is primitive and the prefix is as short as
    possible, which pins down the rotation of the cycle. Build instances
    with :meth:`make`.
    """

    prefix: Path
    cycle: Path

    @classmethod
    def make(cls, prefix: Path, cycle: Path) -> Lasso:
        if not cycle.edges:
            raise NotACycle("a lasso needs a nonempty cycle")
        if cycle.range != cycle.source:
            raise NotACycle(f"{cycle} is not closed")
        if prefix.source != cycle.range:
            raise Mismatch(f"prefix {prefix} does not end where {cycle} starts")
        cycle = _primitive_root(cycle)
        while prefix.edges and prefix.edges[-1] == cycle.edges[-1]:
            n = len(cycle)
            cycle = cycle.sub(n - 1, n) + cycle.sub(0, n - 1)
            prefix = prefix.sub(0, len(prefix) - 1)
        return cls(prefix, cycle)

    @property
    def range(self) -> str:
        return self.prefix.range

    @property
    def size(self) -> int:
        return len(self.prefix) + len(self.cycle)

    def edge(self, i: int) -> str:
        p = len(self.prefix.edges)
        if i < p:
            return self.prefix.edges[i]
        return self.cycle.edges[(i - p) % len(self.cycle.edges)]

    def vertex(self, i: int) -> str:
        p = len(self.prefix.edges)
        if i <= p:
            return self.prefix.verts[i]
        return self.cycle.verts[(i - p) % len(self.cycle.edges)]

    def unroll(self, n: int) -> tuple[str, ...]:
        return tuple(self.edge(i) for i in range(n))

    def head(self, m: int) -> Path:
        """The initial segment ``x(0, m)``."""
        return Path(self.unroll(m), tuple(self.vertex(i) for i in range(m + 1)))

    def extends(self, mu: Path) -> bool:
        if self.range != mu.range:
            return False
        return all(self.edge(i) == e for i, e in enumerate(mu.edges))

    def shift(self, m: int) -> Lasso:
        p = len(self.prefix)
        if m <= p:
            return Lasso.make(self.prefix.sub(m, p), self.cycle)
        n = len(self.cycle)
        r = (m - p) % n
        rotated = self.cycle.sub(r, n) + self.cycle.sub(0, r)
        return Lasso.make(rotated.head(0), rotated)

    def prepend(self, mu: Path) -> Lasso:
        return Lasso.make(mu + self.prefix, self.cycle)

    def __str__(self) -> str:
        head = ".".join(self.prefix.edges)
        return f"{head}({'.'.join(self.cycle.edges)})^inf"

    def __repr__(self) -> str:
        return f"Lasso({self})"


def shift(x: Lasso, m: int) -> Lasso:
    return x.shift(m)


def lag_equivalent(x: Lasso, k: int, y: Lasso) -> bool:
    """Whether ``x_{i+k} == y_i`` for all large ``i``."""
    n = len(x.cycle)
    if n != len(y.cycle):
        return False
    start = max(len(x.prefix) - k, len(y.prefix), -k, 0)
    return all(x.edge(i + k) == y.edge(i) for i in range(start, start + n))


@dataclass(frozen=True, slots=True)
class Arrow:
    """A groupoid element ``(x, k, y)`` with range ``x`` and source ``y``."""

    x: Lasso
    lag: int
    y: Lasso

    def __post_init__(self) -> None:
        if not lag_equivalent(self.x, self.lag, self.y):
            raise ValueError(f"{self.x} and {self.y} are not shift equivalent "
                             f"with lag {self.lag}")

    @property
    def range(self) -> Lasso:
        return self.x

    @property
    def source(self) -> Lasso:
        return self.y

    @property
    def is_unit(self) -> bool:
        return self.lag == 0 and self.x == self.y

    def compose(self, other: Arrow) -> Arrow:
        if self.y != other.x:
            raise NotComposable(f"source {self.y} differs from range {other.x}")
        return Arrow(self.x, self.lag + other.lag, other.y)

    def inverse(self) -> Arrow:
        return Arrow(self.y, -self.lag, self.x)

    def __str__(self) -> str:
        return f"({self.x}, {self.lag}, {self.y})"


def compose_arrows(g1: Arrow, g2: Arrow) -> Arrow:
    return g1.compose(g2)


def invert_arrow(g: Arrow) -> Arrow:
    return g.inverse()


@dataclass(frozen=True, slots=True)
class Cylinder:
    """The compact open bisection ``Z(mu, nu)``."""

    mu: Path
    nu: Path

    def __post_init__(self) -> None:
        if self.mu.source != self.nu.source:
            raise SourceMismatch(f"s({self.mu}) != s({self.nu})")

    @property
    def degree(self) -> int:
        return len(self.mu) - len(self.nu)

    def __contains__(self, g: Arrow) -> bool:
        return (g.lag == self.degree
                and g.x.extends(self.mu)
                and g.y.extends(self.nu)
                and g.x.shift(len(self.mu)) == g.y.shift(len(self.nu)))

    def arrow_at(self, z: Lasso) -> Arrow:
        return Arrow(z.prepend(self.mu), self.degree, z.prepend(self.nu))

    def arrow_with_source(self, y: Lasso) -> Arrow | None:
        if not y.extends(self.nu):
            return None
        return self.arrow_at(y.shift(len(self.nu)))

    def arrow_with_range(self, x: Lasso) -> Arrow | None:
        if not x.extends(self.mu):
            return None
        return self.arrow_at(x.shift(len(self.mu)))

    def inverse(self) -> Cylinder:
        return Cylinder(self.nu, self.mu)

    def __str__(self) -> str:
        return f"Z({self.mu}, {self.nu})"


def cylinder_membership(c: Cylinder, g: Arrow) -> bool:
    return g in c


class Graph:
    """A finite directed graph ``(E^0, E^1, r, s)``.

    Instances are immutable; a private memo holds enumerations of paths and
    lassos, which are pure functions of the graph.
    """

    __slots__ = ("name", "vertices", "edges", "_r", "_s", "_in", "_memo")

    def __init__(self, vertices: Iterable[str],
                 edges: Mapping[str, tuple[str, str]], name: str = "") -> None:
        vertices = list(vertices)
        if len(set(vertices)) != len(vertices):
            raise GraphFormatError("duplicate vertex id")
        clash = set(vertices) & set(edges)
        if clash:
            raise GraphFormatError(f"ids used for both a vertex and an edge: {sorted(clash)}")
        vset = set(vertices)
        for e, (r, s) in edges.items():
            if r not in vset or s not in vset:
                raise GraphFormatError(f"edge {e!r} references an unknown vertex")
        self.name = name
        self.vertices = tuple(sorted(vertices))
        self.edges = tuple(sorted(edges))
        self._r = {e: edges[e][0] for e in self.edges}
        self._s = {e: edges[e][1] for e in self.edges}
        self._in = {v: tuple(e for e in self.edges if self._r[e] == v)
                    for v in self.vertices}
        self._memo: dict = {}

    def _key(self) -> tuple:
        return (self.vertices, tuple((e, self._r[e], self._s[e]) for e in self.edges))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"Graph({self.name or '?'}: {len(self.vertices)} vertices, {len(self.edges)} edges)"

    def r(self, e: str) -> str:
        return self._r[e]

    def s(self, e: str) -> str:
        return self._s[e]

    def in_edges(self, v: str) -> tuple[str, ...]:
        """``r^{-1}(v)``: the edges a path sitting at ``v`` may continue with."""
        return self._in[v]

    def validate(self) -> None:
        for v in self.vertices:
            if not self._in[v]:
                raise SourceVertex(v)

    # -- paths -------------------------------------------------------------

    def vertex(self, v: str) -> Path:
        if v not in self._in:
            raise KeyError(v)
        return Path((), (v,))

    def edge(self, e: str) -> Path:
        return Path((e,), (self._r[e], self._s[e]))

    def path(self, edges: Iterable[str]) -> Path:
        edges = tuple(edges)
        if not edges:
            raise ValueError("use vertex() for length-0 paths")
        for e in edges:
            if e not in self._r:
                raise KeyError(e)
        for a, b in zip(edges, edges[1:]):
            if self._s[a] != self._r[b]:
                raise Mismatch(f"s({a}) = {self._s[a]} but r({b}) = {self._r[b]}")
        return Path(edges, tuple(self._r[e] for e in edges) + (self._s[edges[-1]],))

    def paths_from(self, v: str, k: int) -> tuple[Path, ...]:
        """All paths of length ``k`` with range ``v``."""
        key = ("from", v, k)
        if key not in self._memo:
            if k == 0:
                out = (self.vertex(v),)
            else:
                out = tuple(p + self.edge(e)
                            for p in self.paths_from(v, k - 1)
                            for e in self._in[p.source])
            self._memo[key] = out
        return self._memo[key]

    def paths(self, k: int) -> tuple[Path, ...]:
        return tuple(p for v in self.vertices for p in self.paths_from(v, k))

    def paths_upto(self, k: int) -> tuple[Path, ...]:
        return tuple(p for i in range(k + 1) for p in self.paths(i))

    def extensions(self, mu: Path, k: int) -> tuple[Path, ...]:
        return tuple(mu + tau for tau in self.paths_from(mu.source, k))

    def covers(self, prefixes: Iterable[Path], mu: Path) -> bool:
        """Whether ``Z(mu)`` lies inside the union of the ``Z(p)``."""
        return self.coverage(prefixes)(mu)

    def coverage(self, prefixes: Iterable[Path]) -> Callable[[Path], bool]:
        """``covers`` with the prefix set indexed once, for repeated queries."""
        units = frozenset(prefixes)
        stems = {p.head(k) for p in units for k in range(len(p))}
        lengths = sorted({len(p) for p in units})

        def inside(mu: Path) -> bool:
            if any(mu.head(k) in units for k in lengths if k <= len(mu)):
                return True
            # only prefixes strictly below mu can still help; branch one edge at a time
            if mu not in stems:
                return False
            return all(inside(ext) for ext in self.extensions(mu, 1))

        return inside

    # -- infinite paths ----------------------------------------------------

    def lasso(self, prefix: Iterable[str] | Path, cycle: Iterable[str] | Path,
              at: str | None = None) -> Lasso:
        if not isinstance(cycle, Path):
            cycle = self.path(cycle)
        if not isinstance(prefix, Path):
            prefix = tuple(prefix)
            prefix = self.path(prefix) if prefix else self.vertex(at or cycle.range)
        return Lasso.make(prefix, cycle)

    def first_lasso(self, v: str) -> Lasso:
        """The lasso from ``v`` that always takes the first available edge."""
        edges: list[str] = []
        seen = {v: 0}
        while True:
            e = self._in[v][0]
            edges.append(e)
            v = self._s[e]
            if v in seen:
                i = seen[v]
                path = self.path(edges)
                return Lasso.make(path.sub(0, i), path.sub(i, len(edges)))
            seen[v] = len(edges)

    def lassos(self, max_size: int, at: str | None = None) -> tuple[Lasso, ...]:
        """Every canonical lasso with ``|prefix| + |cycle| <= max_size``."""
        key = ("lassos", max_size)
        if key not in self._memo:
            out = []
            for c in range(1, max_size + 1):
                cycles = [p for p in self.paths(c)
                          if p.source == p.range and _primitive_root(p) is p]
                for cyc in cycles:
                    for k in range(0, max_size - c + 1):
                        for pre in self.paths(k):
                            if pre.source != cyc.range:
                                continue
                            if pre.edges and pre.edges[-1] == cyc.edges[-1]:
                                continue
                            out.append(Lasso(pre, cyc))
            self._memo[key] = tuple(out)
        lassos = self._memo[key]
        if at is None:
            return lassos
        return tuple(x for x in lassos if x.range == at)

    def is_singleton_cylinder(self, mu: Path) -> bool:
        """Whether ``Z(mu)`` contains exactly one infinite path."""
        v = mu.source
        seen: set[str] = set()
        while v not in seen:
            ins = self._in[v]
            if len(ins) != 1:
                return False
            seen.add(v)
            v = self._s[ins[0]]
        return True

    def cycle_has_entry(self, eta: Path) -> bool:
        if not eta.edges or eta.range != eta.source:
            raise NotACycle(f"{eta} is not a closed path")
        if len(set(eta.verts[:-1])) != len(eta.edges):
            raise NotACycle(f"{eta} revisits a vertex")
        return any(len(self._in[eta.verts[i]]) > 1 for i in range(len(eta.edges)))

    def isolation_depth(self, x: Lasso) -> int | None:
        """Least ``k`` with ``Z(x(0, k)) == {x}``, or None if ``x`` is not isolated."""
        for k in range(len(x.prefix) + 1):
            if self.is_singleton_cylinder(x.head(k)):
                return k
        return None

    def is_isolated(self, x: Lasso) -> bool:
        return self.isolation_depth(x) is not None


def validate_graph(g: Graph) -> None:
    g.validate()
