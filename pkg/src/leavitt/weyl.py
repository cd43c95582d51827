"""The algebraic Weyl groupoid: classes ``[(n, x)]`` of normalizers with a base
point, and the isomorphism ``Phi`` from the graph groupoid onto it."""

from __future__ import annotations

from dataclasses import dataclass

from .action import alpha, compress, dom, is_normalizer, isolate
from .errors import NotANormalizer, NotComposable, NotEventuallyPeriodic, OutsideDomain
from .graph import Arrow, Lasso, Path
from .rings import ZZ, Ring
from .steinberg import Element


def _check_pair(n: Element, x: Lasso) -> None:
    if not is_normalizer(n):
        raise NotANormalizer(f"{n} does not normalize the diagonal")
    if not any(x.extends(p) for p in dom(n)):
        raise OutsideDomain(f"{x} is not in dom({n})")


def equivalent(n: Element, x: Lasso, m: Element, x2: Lasso) -> bool:
    """Decide ``(n, x) ~ (m, x2)``."""
    _check_pair(n, x)
    _check_pair(m, x2)
    if x != x2:
        return False
    g = n.graph
    an, am = alpha(n), alpha(m)
    if g.is_isolated(x):
        if an(x) != am(x):
            return False
        c = compress(isolate(g, x), n.star() * m)
        return c is not None and c[1] == 0
    nu_n, mu_n = an.rule_for(x)
    nu_m, mu_m = am.rule_for(x)
    if len(mu_n) - len(nu_n) != len(mu_m) - len(nu_m):
        return False
    depth = max(len(nu_n), len(nu_m))
    tau = x.head(depth)
    out_n = mu_n + tau.sub(len(nu_n), depth)
    out_m = mu_m + tau.sub(len(nu_m), depth)
    return out_n == out_m


@dataclass(frozen=True, eq=False)
class WeylClass:
    """The class of ``(n, x)``; equality runs the decision procedure."""

    n: Element
    x: Lasso

    def __post_init__(self) -> None:
        _check_pair(self.n, self.x)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylClass):
            return NotImplemented
        return equivalent(self.n, self.x, other.n, other.x)

    __hash__ = None  # type: ignore[assignment]

    @property
    def graph(self):
        return self.n.graph

    def target(self) -> Lasso:
        """``alpha_n(x)``, the range unit's base point."""
        return alpha(self.n)(self.x)

    def __str__(self) -> str:
        return f"[({self.n}, {self.x})]"


def weyl_compose(c1: WeylClass, c2: WeylClass) -> WeylClass:
    if c2.target() != c1.x:
        raise NotComposable(f"alpha({c2.n}) sends {c2.x} to {c2.target()}, not {c1.x}")
    return WeylClass(c1.n * c2.n, c2.x)


def weyl_inverse(c: WeylClass) -> WeylClass:
    return WeylClass(c.n.star(), c.target())


def weyl_range(c: WeylClass) -> WeylClass:
    return WeylClass(c.n * c.n.star(), c.target())


def weyl_source(c: WeylClass) -> WeylClass:
    return WeylClass(c.n.star() * c.n, c.x)


def witness(g: Arrow) -> tuple[Path, Path]:
    """The shortest ``(mu, nu)`` with ``g`` in ``Z(mu, nu)``."""
    x, k, y = g.x, g.lag, g.y
    cap = len(x.prefix) + len(y.prefix) + abs(k) + 2 * len(x.cycle) + 1
    for m in range(max(0, k), cap + 1):
        if x.shift(m) == y.shift(m - k):
            return x.head(m), y.head(m - k)
    raise AssertionError(f"no factorization found for {g}")  # excluded by Arrow validation


def phi(g: Arrow, graph, ring: Ring = ZZ) -> WeylClass:
    mu, nu = witness(g)
    return WeylClass(Element.cylinder(graph, mu, nu, ring.one, ring), g.y)


def phi_inverse(c: WeylClass) -> Arrow:
    n, y = c.n, c.x
    g = n.graph
    gamma, beta = alpha(n).rule_for(y)
    x = y.shift(len(gamma)).prepend(beta)
    lag = len(beta) - len(gamma)
    if g.is_isolated(y):
        # The rule only fixes alpha_n(y); the lag is read off p_y 1_{Z(gamma, beta)} n p_y.
        ring = n.ring
        probe = Element.cylinder(g, gamma, beta, ring.one, ring) * n
        comp = compress(isolate(g, y), probe)
        if comp is not None:
            lag += comp[1]
    return Arrow(x, lag, y)


def _stem(z: Lasso, eta: Path) -> Path:
    """The shortest ``lam`` with ``z == lam eta eta ...``."""
    target = Lasso.make(eta.head(0), eta)
    for m in range(len(z.prefix), len(z.prefix) + len(eta) + 1):
        if z.shift(m) == target:
            return z.head(m)
    raise NotEventuallyPeriodic(f"{z} does not end in ({eta})^inf")


def lag_decompose(x: Lasso, mu: Path, nu: Path) -> tuple[int, int]:
    """``(i, j)`` with ``|mu| - |nu| == |lam eta^i| - |kap eta^j|``, smallest ``i + j`` first."""
    nx, mx = x.prepend(nu), x.prepend(mu)
    eta = nx.cycle
    kap = nx.prefix
    lam = _stem(mx, eta)
    want = len(mu) - len(nu)
    bound = len(mu) + len(nu) + 2 * len(eta)
    for total in range(2 * bound + 1):
        for i in range(max(0, total - bound), min(total, bound) + 1):
            j = total - i
            if len(lam) + i * len(eta) - len(kap) - j * len(eta) == want:
                return i, j
    raise NotEventuallyPeriodic(f"no (i, j) within {bound} for mu={mu}, nu={nu}")
