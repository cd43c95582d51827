"""Diagonal preserving ring *-isomorphisms between Leavitt path algebras and
the groupoid isomorphisms they induce (and are induced by)."""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass, field

from .errors import NotAHomomorphism, NotValidated
from .graph import Arrow, Graph, Lasso, Path
from .rings import ZZ, Ring
from .stone import induce_kappa
from .steinberg import Element, leavitt_violations
from .weyl import WeylClass, phi, phi_inverse

TWISTS = ("identity", "conjugation")


@dataclass(eq=False)
class IsoSpec:
    """A candidate isomorphism given by images of the generators of ``L_R(source)``.

    ``p``, ``s`` and ``t`` map vertex ids, edge ids and ghost edges (keyed by
    edge id) to elements over ``target``. The twist is applied to the
    coefficients of an element before its terms are mapped.
    """

    source: Graph
    target: Graph
    ring: Ring
    p: dict[str, Element]
    s: dict[str, Element]
    t: dict[str, Element]
    twist: str = "identity"
    inverse: IsoSpec | None = None
    name: str = ""
    refs: tuple[str, str] | None = None
    validated: bool = field(default=False, compare=False)
    _paths: dict = field(default_factory=dict, repr=False)
    _ghosts: dict = field(default_factory=dict, repr=False)
    _kappa: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if self.twist not in TWISTS:
            raise ValueError(f"unknown twist {self.twist!r}")

    def twist_scalar(self, r):
        return self.ring.conj(r) if self.twist == "conjugation" else self.ring.coerce(r)

    def path_image(self, mu: Path) -> Element:
        """``pi(s_mu)``."""
        hit = self._paths.get(mu)
        if hit is None:
            if mu.is_vertex:
                hit = self.p[mu.range]
            else:
                hit = self.s[mu.edges[0]]
                for e in mu.edges[1:]:
                    hit = hit * self.s[e]
            self._paths[mu] = hit
        return hit

    def ghost_image(self, nu: Path) -> Element:
        """``pi(s_nu*)`` built from the ghost images."""
        hit = self._ghosts.get(nu)
        if hit is None:
            if nu.is_vertex:
                hit = self.p[nu.range]
            else:
                hit = self.t[nu.edges[-1]]
                for e in reversed(nu.edges[:-1]):
                    hit = hit * self.t[e]
            self._ghosts[nu] = hit
        return hit

    def extend(self, f: Element) -> Element:
        """Apply the homomorphism determined by the generator images (no validation gate)."""
        total = Element.zero(self.target, self.ring)
        parts = [self.path_image(mu) * self.ghost_image(nu) * self.twist_scalar(r)
                 for mu, nu, r in f.items()]
        for part in parts:
            total = total + part
        return total

    def kappa(self, x: Lasso) -> Lasso:
        hit = self._kappa.get(x)
        if hit is None:
            hit = self._kappa[x] = induce_kappa(self, x)
        return hit

    def generators(self):
        """Source generators paired with their images, labelled for reports."""
        g, ring = self.source, self.ring
        out = []
        for v in g.vertices:
            out.append((f"p_{v}", Element.vertex(g, v, ring), self.p[v]))
        for e in g.edges:
            out.append((f"s_{e}", Element.edge(g, e, ring), self.s[e]))
            out.append((f"s_{e}*", Element.ghost(g, e, ring), self.t[e]))
        return out


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: str = ""

    def __str__(self) -> str:
        tail = f": {self.witness}" if self.witness else ""
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}{tail}"


@dataclass
class ValidationReport:
    spec_name: str
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __str__(self) -> str:
        lines = [str(c) for c in self.checks]
        lines.append(f"{'PASS' if self.passed else 'FAIL'} {self.spec_name or 'spec'}")
        return "\n".join(lines)


def _family_checks(spec: IsoSpec, depth: int, prefix: str = "") -> list[Check]:
    g, h, ring = spec.source, spec.target, spec.ring
    checks: list[Check] = []

    typed = [lbl for lbl, _, img in spec.generators()
             if img.graph != h or img.ring is not ring]
    missing = [v for v in g.vertices if v not in spec.p] + \
              [e for e in g.edges if e not in spec.s or e not in spec.t]
    checks.append(Check(prefix + "images", not typed and not missing,
                        ", ".join(typed + missing)))
    if typed or missing:
        return checks

    bad = []
    for v in g.vertices:
        pv = spec.p[v]
        if pv * pv != pv or pv.star() != pv:
            bad.append(f"p_{v} -> {pv} is not a projection")
        for w in g.vertices:
            if v < w and (pv * spec.p[w]):
                bad.append(f"p_{v} p_{w} -> {pv * spec.p[w]} != 0")
    checks.append(Check(prefix + "orthogonal-idempotents", not bad, "; ".join(bad[:3])))

    violations = leavitt_violations(g, spec.p, spec.s, spec.t)
    for rel in ("L1", "L2", "L3", "L4"):
        wit = [w for r, w in violations if r == rel]
        checks.append(Check(prefix + rel, not wit, "; ".join(wit[:3])))

    bad = [f"s_{e}* -> {spec.t[e]} but (s_{e})* -> {spec.s[e].star()}"
           for e in g.edges if spec.t[e] != spec.s[e].star()]
    checks.append(Check(prefix + "star-compatibility", not bad, "; ".join(bad[:3])))

    bad = []
    for mu in g.paths_upto(depth):
        img = spec.extend(Element.cylinder(g, mu, mu, ring.one, ring))
        if not img.is_diagonal():
            bad.append(f"1_Z({mu}) -> {img}")
            break
    checks.append(Check(prefix + "diagonal-preservation", not bad, "; ".join(bad)))
    return checks


def validate_pi(spec: IsoSpec, depth: int = 4) -> ValidationReport:
    checks = _family_checks(spec, depth)
    inv = spec.inverse
    if inv is None:
        checks.append(Check("inverse", False, "no inverse declared"))
    elif inv.source != spec.target or inv.target != spec.source or inv.ring is not spec.ring:
        checks.append(Check("inverse", False, "declared inverse does not run target -> source"))
    else:
        checks += _family_checks(inv, depth, "inverse:")
        bad = []
        if all(c.passed for c in checks):
            for lbl, gen, img in spec.generators():
                back = inv.extend(img)
                if back != gen:
                    bad.append(f"{lbl} -> {img} -> {back}")
            for lbl, gen, img in inv.generators():
                back = spec.extend(img)
                if back != gen:
                    bad.append(f"{lbl} -> {img} -> {back} (target side)")
        else:
            bad.append("skipped: relations failed")
        checks.append(Check("inverse", not bad, "; ".join(bad[:3])))
    report = ValidationReport(spec.name, checks)
    spec.validated = report.passed
    if report.passed and inv is not None:
        inv.validated = True
    return report


def extend_pi(spec: IsoSpec, f: Element) -> Element:
    if not spec.validated:
        raise NotValidated(f"spec {spec.name or '?'} has not passed validate_pi")
    return spec.extend(f)


def psi(spec: IsoSpec, c: WeylClass) -> WeylClass:
    if not spec.validated:
        raise NotValidated(f"spec {spec.name or '?'} has not passed validate_pi")
    return WeylClass(spec.extend(c.n), spec.kappa(c.x))


# -- groupoid isomorphisms -------------------------------------------------

def cylinder_keys(graph: Graph, depth: int) -> list[tuple[Path, Path]]:
    paths = graph.paths_upto(depth)
    return [(mu, nu) for mu in paths for nu in paths if mu.source == nu.source]


def _indicator(graph: Graph, f: Element) -> Element:
    return Element.from_terms(graph, [(mu, nu, 1) for mu, nu, _ in f.items()], ZZ)


@dataclass(eq=False)
class GroupoidIso:
    """A groupoid isomorphism ``G_source -> G_target``.

    ``image`` sends a cylinder ``Z(mu, nu)`` to the indicator of its image
    (an element over the target with all coefficients 1); ``evaluator``
    acts on individual arrows. ``depth`` bounds the materialized table.
    """

    source: Graph
    target: Graph
    depth: int
    image: Callable[[Path, Path], Element]
    evaluator: Callable[[Arrow], Arrow]
    inverse: GroupoidIso | None = None
    name: str = ""
    _memo: dict = field(default_factory=dict, repr=False)

    def image_of(self, mu: Path, nu: Path) -> Element:
        key = (mu, nu)
        if key not in self._memo:
            self._memo[key] = self.image(mu, nu)
        return self._memo[key]

    def table(self, depth: int | None = None) -> dict[tuple[Path, Path], Element]:
        d = self.depth if depth is None else depth
        return {k: self.image_of(*k) for k in cylinder_keys(self.source, d)}

    def __call__(self, g: Arrow) -> Arrow:
        return self.evaluator(g)

    @classmethod
    def from_graph_map(cls, source: Graph, target: Graph, vmap: dict[str, str],
                       emap: dict[str, str], depth: int = 3, name: str = "") -> GroupoidIso:
        def path(mu: Path) -> Path:
            return target.path(emap[e] for e in mu.edges) if mu.edges else target.vertex(vmap[mu.range])

        def lasso(x: Lasso) -> Lasso:
            return Lasso.make(path(x.prefix), path(x.cycle))

        def image(mu: Path, nu: Path) -> Element:
            return Element.cylinder(target, path(mu), path(nu))

        def evaluator(g: Arrow) -> Arrow:
            return Arrow(lasso(g.x), g.lag, lasso(g.y))

        om = cls(source, target, depth, image, evaluator, name=name)
        vinv = {b: a for a, b in vmap.items()}
        einv = {b: a for a, b in emap.items()}
        if len(vinv) == len(vmap) and len(einv) == len(emap):
            om.inverse = _graph_map_inverse(target, source, vinv, einv, depth, om, name)
        return om


def _graph_map_inverse(source, target, vmap, emap, depth, forward, name):
    def path(mu: Path) -> Path:
        return target.path(emap[e] for e in mu.edges) if mu.edges else target.vertex(vmap[mu.range])

    def image(mu, nu):
        return Element.cylinder(target, path(mu), path(nu))

    def evaluator(g):
        return Arrow(Lasso.make(path(g.x.prefix), path(g.x.cycle)), g.lag,
                     Lasso.make(path(g.y.prefix), path(g.y.cycle)))

    return GroupoidIso(source, target, depth, image, evaluator, forward, f"{name}^-1" if name else "")


def check_graph_map(source: Graph, target: Graph, vmap: dict, emap: dict) -> list[str]:
    """Problems preventing ``(vmap, emap)`` from being a graph isomorphism."""
    bad = []
    if sorted(vmap) != list(source.vertices) or sorted(vmap.values()) != list(target.vertices):
        bad.append("vertex map is not a bijection")
    if sorted(emap) != list(source.edges) or sorted(emap.values()) != list(target.edges):
        bad.append("edge map is not a bijection")
    if not bad:
        for e, f in emap.items():
            if vmap[source.r(e)] != target.r(f) or vmap[source.s(e)] != target.s(f):
                bad.append(f"edge {e} -> {f} does not respect range and source")
    return bad


def groupoid_iso_from_pi(spec: IsoSpec, depth: int = 3, with_inverse: bool = True) -> GroupoidIso:
    """``Phi_F^-1 o Psi o Phi_E``: on cylinders ``Z(mu, nu)`` it is ``supp pi(1_{Z(mu, nu)})``."""
    if not spec.validated:
        raise NotValidated(f"spec {spec.name or '?'} has not passed validate_pi")
    E, F, ring = spec.source, spec.target, spec.ring

    def image(mu: Path, nu: Path) -> Element:
        return _indicator(F, spec.extend(Element.cylinder(E, mu, nu, ring.one, ring)))

    def evaluator(g: Arrow) -> Arrow:
        return phi_inverse(psi(spec, phi(g, E, ring)))

    om = GroupoidIso(E, F, depth, image, evaluator, name=spec.name)
    if with_inverse and spec.inverse is not None:
        back = groupoid_iso_from_pi(spec.inverse, depth, with_inverse=False)
        back.inverse = om
        om.inverse = back
    return om


def homomorphism_violations(om: GroupoidIso, depth: int | None = None) -> list[str]:
    """Cylinder-level check: ``Omega(AB) == Omega(A) Omega(B)`` for every table key ``A``
    against each generator cylinder ``B``, and ``Omega(A^-1) == Omega(A)^-1``."""
    E = om.source
    d = om.depth if depth is None else depth
    gens = [(E.vertex(v), E.vertex(v)) for v in E.vertices]
    gens += [(E.edge(e), E.vertex(E.s(e))) for e in E.edges]
    gens += [(E.vertex(E.s(e)), E.edge(e)) for e in E.edges]
    bad = []
    for mu, nu in cylinder_keys(E, d):
        a = om.image_of(mu, nu)
        if om.image_of(nu, mu) != a.star():
            bad.append(f"Z({nu},{mu}) is not sent to the inverse of the image of Z({mu},{nu})")
        prod_a = Element.cylinder(E, mu, nu)
        for beta, gamma in gens:
            prod = prod_a * Element.cylinder(E, beta, gamma)
            want = Element.zero(om.target, ZZ)
            for m2, n2, _ in prod.items():
                want = want + om.image_of(m2, n2)
            got = a * om.image_of(beta, gamma)
            if got != want:
                bad.append(f"Z({mu},{nu}) Z({beta},{gamma}): image of product {want} "
                           f"!= product of images {got}")
        if len(bad) > 5:
            break
    return bad


def sample_arrow_violations(om: GroupoidIso, pairs, inverse: bool = True) -> list[str]:
    """Arrow-level check on composable pairs: products, inverses and (when an
    inverse map is available) the round trip."""
    bad = []
    for g1, g2 in pairs:
        h1, h2 = om(g1), om(g2)
        if h1.y != h2.x:
            bad.append(f"images of {g1} and {g2} are not composable")
            continue
        if om(g1.compose(g2)) != h1.compose(h2):
            bad.append(f"product of {g1} and {g2}")
        if om(g1.inverse()) != h1.inverse():
            bad.append(f"inverse of {g1}")
        if inverse and om.inverse is not None and om.inverse(h1) != g1:
            bad.append(f"round trip of {g1}")
    return bad


def pi_from_groupoid_iso(om: GroupoidIso, ring: Ring = ZZ, check: bool = True,
                         with_inverse: bool = True) -> IsoSpec:
    """``pi(f) = f o Omega^-1`` on generators: each image is the indicator of ``Omega(Z)``."""
    if check:
        bad = homomorphism_violations(om, min(om.depth, 2))
        if bad:
            raise NotAHomomorphism(bad[0])
    E, F = om.source, om.target

    def convert(f: Element) -> Element:
        return Element.from_terms(F, [(mu, nu, ring.one) for mu, nu, _ in f.items()], ring)

    p = {v: convert(om.image_of(E.vertex(v), E.vertex(v))) for v in E.vertices}
    s = {e: convert(om.image_of(E.edge(e), E.vertex(E.s(e)))) for e in E.edges}
    t = {e: convert(om.image_of(E.vertex(E.s(e)), E.edge(e))) for e in E.edges}
    spec = IsoSpec(E, F, ring, p, s, t, "identity", name=f"pi({om.name})" if om.name else "")
    if om.inverse is not None and with_inverse:
        spec.inverse = pi_from_groupoid_iso(om.inverse, ring, check=False, with_inverse=False)
        spec.inverse.inverse = spec
    return spec


def random_composable_pairs(graph: Graph, count: int, rng: random.Random,
                            max_size: int = 4) -> list[tuple[Arrow, Arrow]]:
    from .sampling import random_arrow

    pairs = []
    while len(pairs) < count:
        g1 = random_arrow(graph, rng, max_size)
        g2 = random_arrow(graph, rng, max_size, range_at=g1.y)
        pairs.append((g1, g2))
    return pairs
