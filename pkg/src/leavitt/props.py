"""Seeded property suites behind ``leavitt check-props`` and the acceptance tests.

A property is a function of a :class:`Context` returning an :class:`Outcome`
(number of cases tried and the witnesses of any failures). Properties are
registered per suite; reports are sorted by property name.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass, field

from . import oracles
from .action import (alpha, compose_diagonal, compress, compress_scalar, dom, is_normalizer,
                     is_normalizer_bounded, isolate, normalizer_depth, ran)
from .corpus import (REFERENCE_GRAPHS, graph_map_spec, identity_spec, negative_specs,
                     positive_specs, renamed)
from .errors import OutsideDomain
from .graph import Arrow, Cylinder, Graph, Lasso, lag_equivalent
from .iso import (IsoSpec, groupoid_iso_from_pi, homomorphism_violations, pi_from_groupoid_iso,
                  random_composable_pairs, sample_arrow_violations, validate_pi)
from .rings import ZI, ZZ, Gaussian, Ring
from .sampling import (random_arrow, random_cylinder_sum, random_diagonal, random_lasso,
                       random_normalizer, random_normalizer_at, random_path, random_scalar)
from .steinberg import Element, leavitt_family, leavitt_violations
from .stone import CompactOpen, kappa_iff_violations, rho, rho_inverse
from .weyl import WeylClass, phi, phi_inverse, weyl_compose, weyl_inverse, weyl_range, weyl_source


@dataclass
class Context:
    graph: Graph
    ring: Ring
    rng: random.Random
    count: int = 20


@dataclass
class Outcome:
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, witness: str) -> None:
        self.failures.append(witness)


Property = Callable[[Context], Outcome]
REGISTRY: dict[str, tuple[str, Property]] = {}
SUITES = ("graph", "ring", "steinberg", "action", "weyl", "stone", "iso")


def prop(suite: str, name: str):
    def register(fn: Property) -> Property:
        REGISTRY[f"{suite}.{name}"] = (suite, fn)
        return fn
    return register


# -- graph ------------------------------------------------------------------

@prop("graph", "canonical-lasso")
def canonical_lasso(ctx: Context) -> Outcome:
    """Lasso equality agrees with comparing unrollings."""
    g, rng, out = ctx.graph, ctx.rng, Outcome()
    for _ in range(ctx.count):
        x = random_lasso(g, rng, 4)
        k = rng.randint(0, 3)
        y = x.shift(k).prepend(x.head(k)) if rng.random() < 0.5 else random_lasso(g, rng, 4)
        # a non-canonical spelling of the same point
        z = Lasso.make(x.head(len(x.prefix) + len(x.cycle)), x.shift(len(x.prefix)).head(2 * len(x.cycle)))
        out.cases += 1
        if (x == y) != oracles.unroll_equal(x, y) or z != x:
            out.fail(f"{x} vs {y}")
    return out


@prop("graph", "groupoid-laws")
def groupoid_laws(ctx: Context) -> Outcome:
    g, rng, out = ctx.graph, ctx.rng, Outcome()
    for _ in range(ctx.count):
        a = random_arrow(g, rng)
        b = random_arrow(g, rng, range_at=a.y)
        c = random_arrow(g, rng, range_at=b.y)
        out.cases += 1
        if a.compose(b).compose(c) != a.compose(b.compose(c)):
            out.fail(f"associativity at {a}, {b}, {c}")
        if a.compose(a.inverse()) != Arrow(a.x, 0, a.x) or a.inverse().lag != -a.lag:
            out.fail(f"inverse of {a}")
        if not oracles.unroll_lag_equivalent(a.x, a.lag, a.y):
            out.fail(f"{a} fails the unrolled lag test")
    return out


@prop("graph", "lag-transitivity")
def lag_transitivity(ctx: Context) -> Outcome:
    g, rng, out = ctx.graph, ctx.rng, Outcome()
    for _ in range(ctx.count):
        a = random_arrow(g, rng)
        b = random_arrow(g, rng, range_at=a.y)
        x, k, y = a.x, a.lag, a.y
        l, z = b.lag, b.y
        out.cases += 1
        if not (lag_equivalent(x, k, y) and lag_equivalent(y, l, z) and lag_equivalent(x, k + l, z)):
            out.fail(f"{x} ~{k} {y} ~{l} {z}")
        j = rng.randint(-3, 3)
        if lag_equivalent(x, j, z) != oracles.unroll_lag_equivalent(x, j, z):
            out.fail(f"lag {j} between {x} and {z} disagrees with unrolling")
    return out


@prop("graph", "singleton-iff-entry-free")
def singleton_iff_entry_free(ctx: Context) -> Outcome:
    g, out = ctx.graph, Outcome()
    for mu in g.paths_upto(3):
        out.cases += 1
        tail = g.first_lasso(mu.source)
        cycle = tail.cycle
        single = not g.cycle_has_entry(cycle) and all(
            len(g.in_edges(tail.vertex(i))) == 1 for i in range(len(tail.prefix)))
        if g.is_singleton_cylinder(mu) != single:
            out.fail(str(mu))
    return out


# -- ring -------------------------------------------------------------------

@prop("ring", "integral-domain")
def integral_domain(ctx: Context) -> Outcome:
    out = Outcome()
    if ctx.ring is ZZ:
        values = list(range(-12, 13))
    else:
        values = [Gaussian(a, b) for a in range(-5, 6) for b in range(-5, 6)]
    for r in values:
        for s in values:
            out.cases += 1
            if ctx.ring.is_zero(ctx.ring.mul(r, s)) and not (ctx.ring.is_zero(r) or ctx.ring.is_zero(s)):
                out.fail(f"{r} * {s} == 0")
    return out


@prop("ring", "involution")
def involution(ctx: Context) -> Outcome:
    ring, rng, out = ctx.ring, ctx.rng, Outcome()
    for _ in range(ctx.count * 50):
        if ring is ZZ:
            r, s = rng.randint(-10**30, 10**30), rng.randint(-10**30, 10**30)
        else:
            r = Gaussian(rng.randint(-10**20, 10**20), rng.randint(-10**20, 10**20))
            s = Gaussian(rng.randint(-10**20, 10**20), rng.randint(-10**20, 10**20))
        out.cases += 1
        if ring.conj(ring.conj(r)) != r or ring.conj(ring.mul(r, s)) != ring.mul(ring.conj(r), ring.conj(s)):
            out.fail(f"{r}, {s}")
        if ring.conj(ring.add(r, s)) != ring.add(ring.conj(r), ring.conj(s)):
            out.fail(f"additivity at {r}, {s}")
    if ring.conj(ring.one) != ring.one or ring.conj(ring.zero) != ring.zero:
        out.fail("involution moves 0 or 1")
    return out


# -- steinberg --------------------------------------------------------------

def _elem(ctx: Context) -> Element:
    return random_cylinder_sum(ctx.graph, ctx.ring, ctx.rng)


@prop("steinberg", "ring-axioms")
def ring_axioms(ctx: Context) -> Outcome:
    out = Outcome()
    for _ in range(ctx.count):
        f, g, h = _elem(ctx), _elem(ctx), _elem(ctx)
        out.cases += 1
        if (f * g) * h != f * (g * h):
            out.fail(f"associativity: {f} ; {g} ; {h}")
        if f * (g + h) != f * g + f * h or (g + h) * f != g * f + h * f:
            out.fail(f"distributivity: {f} ; {g} ; {h}")
        if f + (-f):
            out.fail(f"f - f != 0 for {f}")
    return out


@prop("steinberg", "involution")
def star_laws(ctx: Context) -> Outcome:
    out = Outcome()
    for _ in range(ctx.count):
        f, g = _elem(ctx), _elem(ctx)
        r = random_scalar(ctx.ring, ctx.rng)
        out.cases += 1
        if (f * g).star() != g.star() * f.star():
            out.fail(f"(fg)* at {f} ; {g}")
        if f.star().star() != f or (f + g).star() != f.star() + g.star():
            out.fail(f"star at {f} ; {g}")
        if f.scale(r).star() != f.star().scale(ctx.ring.conj(r)):
            out.fail(f"conjugate linearity at {r} ; {f}")
    return out


@prop("steinberg", "leavitt-relations")
def leavitt_relations(ctx: Context) -> Outcome:
    p, s, t = leavitt_family(ctx.graph, ctx.ring)
    out = Outcome(cases=len(p) + 2 * len(s))
    for rel, wit in leavitt_violations(ctx.graph, p, s, t):
        out.fail(f"{rel}: {wit}")
    return out


@prop("steinberg", "grading")
def grading(ctx: Context) -> Outcome:
    g, out = ctx.graph, Outcome()
    for _ in range(ctx.count):
        f, h = _elem(ctx), _elem(ctx)
        out.cases += 1
        total = Element.zero(g, ctx.ring)
        for k in sorted(f.degrees()):
            total = total + f.component(k)
        if total != f:
            out.fail(f"components do not sum to {f}")
        fk, hk = f.degree(), h.degree()
        prod = f * h
        if fk is not None and hk is not None and prod and prod.degree() != fk + hk:
            out.fail(f"degree of {f} times {h}")
        for mu, nu, _ in prod.items():
            z = g.first_lasso(mu.source)
            gamma = Arrow(z.prepend(mu), len(mu) - len(nu), z.prepend(nu))
            # gamma must factor through supp(f) supp(h)
            if not any(h.evaluate(Arrow(eta.y, gamma.lag - eta.lag, gamma.y))
                       for eta, _ in oracles.arrows_out_of_support(f, gamma.x)):
                out.fail(f"{gamma} in supp(fh) but not in supp(f)supp(h)")
                break
    return out


@prop("steinberg", "pointwise-convolution")
def pointwise_convolution(ctx: Context) -> Outcome:
    g, out = ctx.graph, Outcome()
    for _ in range(ctx.count):
        f, h = _elem(ctx), _elem(ctx)
        prod = f * h
        arrows = oracles.sample_arrows(prod) + oracles.sample_arrows(f) + \
            [random_arrow(g, ctx.rng) for _ in range(4)]
        for gamma in arrows:
            out.cases += 1
            if oracles.pointwise_product(f, h, gamma) != prod.evaluate(gamma):
                out.fail(f"({f}) * ({h}) at {gamma}")
                break
    return out


# -- action -----------------------------------------------------------------

def _normalizer(ctx: Context) -> Element:
    return random_normalizer(ctx.graph, ctx.ring, ctx.rng)


@prop("action", "normalizer-depth")
def normalizer_depth_oracle(ctx: Context) -> Outcome:
    """The structural test, the depth test and three deeper depths all agree."""
    out = Outcome()
    for i in range(ctx.count):
        n = _normalizer(ctx) if i % 2 else random_cylinder_sum(ctx.graph, ctx.ring, ctx.rng)
        if n.terms and normalizer_depth(n) > 6:
            continue
        out.cases += 1
        deep = oracles.normalizer_by_depths(n, 3)
        if len(set(deep)) != 1 or is_normalizer(n) != deep[0] or is_normalizer_bounded(n) != deep[0]:
            out.fail(f"{n}: depths {deep}, structural {is_normalizer(n)}")
    return out


@prop("action", "support-in-isotropy")
def support_in_isotropy(ctx: Context) -> Outcome:
    """Arrows of ``supp(n) supp(n)^-1`` and ``supp(n)^-1 supp(n)`` have range == source."""
    g, out = ctx.graph, Outcome()
    for _ in range(ctx.count):
        n = _normalizer(ctx)
        cyls = [Cylinder(mu, nu) for mu, nu, _ in n.items()]
        for c1 in cyls:
            for c2 in cyls:
                for side in ("source", "range"):
                    a, b = (c1.nu, c2.nu) if side == "source" else (c1.mu, c2.mu)
                    longer = a if len(a) >= len(b) else b
                    if longer.extends(a) is None or longer.extends(b) is None:
                        continue
                    for z in oracles.lassos_in(g, longer, 2):
                        out.cases += 1
                        if side == "source":
                            arrow = c1.arrow_with_source(z).compose(c2.arrow_with_source(z).inverse())
                        else:
                            arrow = c1.arrow_with_range(z).inverse().compose(c2.arrow_with_range(z))
                        if arrow.x != arrow.y:
                            out.fail(f"{arrow} from terms of {n}")
    return out


@prop("action", "conjugation-formula")
def conjugation_formula(ctx: Context) -> Outcome:
    """``n* d n == (d o alpha_n) n* n``."""
    out = Outcome()
    for _ in range(ctx.count):
        n = _normalizer(ctx)
        d = random_diagonal(ctx.graph, ctx.ring, ctx.rng)
        out.cases += 1
        lhs = n.star() * d * n
        rhs = compose_diagonal(d, alpha(n)) * (n.star() * n)
        if lhs != rhs:
            out.fail(f"n = {n}, d = {d}: {lhs} != {rhs}")
    return out


@prop("action", "action-laws")
def action_laws(ctx: Context) -> Outcome:
    """``alpha_{mn} = alpha_m alpha_n`` and ``alpha_{n*} = alpha_n^-1`` on lassos."""
    g, out = ctx.graph, Outcome()
    points = g.lassos(4)
    for _ in range(ctx.count):
        n, m = _normalizer(ctx), _normalizer(ctx)
        an, am, amn, ans = alpha(n), alpha(m), alpha(m * n), alpha(n.star())
        dmn = dom(m * n)
        if set(ran(n)) != set(ans.domain()) and any((x in an) != (x in ans.inverse()) for x in points):
            out.fail(f"ran({n}) is not dom({n}*)")
        for x in ctx.rng.sample(points, min(len(points), 50)):
            out.cases += 1
            through = x in an and an(x) in am
            if through != (x in amn) or (x in amn) != any(x.extends(p) for p in dmn):
                out.fail(f"domain of alpha_mn at {x} for n = {n}, m = {m}")
                continue
            if through and amn(x) != am(an(x)):
                out.fail(f"alpha_mn({x}) for n = {n}, m = {m}")
            if x in an and ans(an(x)) != x:
                out.fail(f"alpha_n* alpha_n({x}) for n = {n}")
    return out


def _isolated_points(g: Graph) -> list[Lasso]:
    return [x for x in g.lassos(4) if g.is_isolated(x)]


@prop("action", "isolated-paths")
def isolated_paths(ctx: Context) -> Outcome:
    """Single-term compressions, degree a multiple of the cycle length, the scalar
    law, and ``n p_x == p_{alpha_n(x)} n``."""
    g, ring, out = ctx.graph, ctx.ring, Outcome()
    points = _isolated_points(g)
    if not points:
        return out
    for _ in range(ctx.count):
        n = _normalizer(ctx)
        an = alpha(n)
        for x in points:
            ip = isolate(g, x)
            px = ip.projection(g, ring)
            out.cases += 1
            c = compress(ip, n)
            if c is not None and c[1] % len(x.cycle):
                out.fail(f"p_x n p_x at {x} has degree {c[1]} for n = {n}")
            a0 = n.component(0)
            r = compress_scalar(ip, a0)
            if px * a0 * px != px.scale(r):
                out.fail(f"p_x a p_x != r p_x at {x} for a = {a0}")
            if x in an:
                py = isolate(g, an(x)).projection(g, ring)
                if n * px != py * n or n * px * n.star() != n * n.star() * py:
                    out.fail(f"n p_x != p_(alpha_n x) n at {x} for n = {n}")
    return out


# -- weyl -------------------------------------------------------------------

def _class_at(ctx: Context, x: Lasso) -> WeylClass:
    return WeylClass(random_normalizer_at(ctx.graph, ctx.ring, ctx.rng, x), x)


def _equivalent_variant(ctx: Context, c: WeylClass) -> WeylClass:
    """Another representative of ``c``: times a diagonal around ``x`` or a refinement."""
    g, ring, x = ctx.graph, ctx.ring, c.x
    k = ctx.rng.randint(0, 2)
    d = Element.cylinder(g, x.head(k), x.head(k), ring.one, ring)
    if ctx.rng.random() < 0.5:
        d = d + Element.cylinder(g, x.head(k + 1), x.head(k + 1), ring.one, ring)
    return WeylClass(c.n * d, x)


@prop("weyl", "equivalence-relation")
def equivalence_relation(ctx: Context) -> Outcome:
    g, rng, out = ctx.graph, ctx.rng, Outcome()
    for _ in range(ctx.count):
        x = random_lasso(g, rng, 4)
        a = _class_at(ctx, x)
        b = _equivalent_variant(ctx, a) if rng.random() < 0.5 else _class_at(ctx, x)
        c = _equivalent_variant(ctx, b) if rng.random() < 0.5 else _class_at(ctx, x)
        out.cases += 1
        ab, ba, bc, ac = a == b, b == a, b == c, a == c
        if not a == a or ab != ba or (ab and bc and not ac):
            out.fail(f"at {x}: {a.n} ; {b.n} ; {c.n}")
        oracle = oracles.isolated_equivalent(a.n, b.n, x) if g.is_isolated(x) else \
            oracles.germs_agree(a.n, b.n, x)
        if ab != oracle:
            out.fail(f"decision {ab} but oracle {oracle} for {a.n} ; {b.n} at {x}")
    return out


@prop("weyl", "groupoid-laws")
def weyl_groupoid_laws(ctx: Context) -> Outcome:
    g, rng, out = ctx.graph, ctx.rng, Outcome()
    for _ in range(ctx.count):
        c2 = _class_at(ctx, random_lasso(g, rng, 4))
        c1 = _class_at(ctx, c2.target())
        c0 = _class_at(ctx, c1.target())
        out.cases += 1
        if weyl_compose(weyl_compose(c0, c1), c2) != weyl_compose(c0, weyl_compose(c1, c2)):
            out.fail(f"associativity at {c0}, {c1}, {c2}")
        if weyl_compose(c1, weyl_inverse(c1)) != weyl_range(c1):
            out.fail(f"c c^-1 != r(c) for {c1}")
        if weyl_compose(c1, weyl_source(c1)) != c1:
            out.fail(f"c s(c) != c for {c1}")
        v1 = _equivalent_variant(ctx, c1)
        if weyl_compose(v1, c2) != weyl_compose(c1, c2):
            out.fail(f"product depends on the representative of {c1}")
    return out


@prop("weyl", "phi")
def phi_laws(ctx: Context) -> Outcome:
    g, ring, rng, out = ctx.graph, ctx.ring, ctx.rng, Outcome()
    for _ in range(ctx.count):
        a = random_arrow(g, rng)
        b = random_arrow(g, rng, range_at=a.y)
        out.cases += 1
        pa, pb = phi(a, g, ring), phi(b, g, ring)
        if phi(a.compose(b), g, ring) != weyl_compose(pa, pb):
            out.fail(f"phi is not multiplicative at {a}, {b}")
        if phi_inverse(pa) != a:
            out.fail(f"phi_inverse(phi({a})) = {phi_inverse(pa)}")
        c = _class_at(ctx, a.y)
        back = phi_inverse(c)
        if phi(back, g, ring) != c:
            out.fail(f"phi(phi_inverse({c})) = {phi(back, g, ring)}")
        nu = random_path(g, rng, rng.randint(0, 2)) or g.vertex(random_lasso(g, rng).range)
        mu = random_path(g, rng, rng.randint(0, 2), source=nu.source) or g.vertex(nu.source)
        inside = Cylinder(mu, nu).arrow_at(random_lasso(g, rng, 3, at=nu.source))
        if phi(inside, g, ring) != WeylClass(Element.cylinder(g, mu, nu, ring.one, ring), inside.y):
            out.fail(f"phi({inside}) is not in the basic set of 1_Z({mu},{nu})")
    return out


# -- stone ------------------------------------------------------------------

def _compact_open(ctx: Context) -> CompactOpen:
    g = ctx.graph
    k = ctx.rng.randint(0, 3)
    return CompactOpen.of(g, [p for p in g.paths(k) if ctx.rng.random() < 0.5])


@prop("stone", "boolean-laws")
def boolean_laws(ctx: Context) -> Outcome:
    out = Outcome()
    g = ctx.graph
    top = CompactOpen.everything(g)
    for _ in range(ctx.count):
        a, b, c = _compact_open(ctx), _compact_open(ctx), _compact_open(ctx)
        out.cases += 1
        laws = {
            "meet associativity": a.meet(b).meet(c) == a.meet(b.meet(c)),
            "join associativity": a.join(b).join(c) == a.join(b.join(c)),
            "absorption": a.join(a.meet(b)) == a and a.meet(a.join(b)) == a,
            "distributivity": a.meet(b.join(c)) == a.meet(b).join(a.meet(c)),
            "complement": a.join(top.difference(a)) == top and a.meet(top.difference(a)).is_empty(),
            "order": a.meet(b).leq(a) and a.leq(a.join(b)),
        }
        for law, ok in laws.items():
            if not ok:
                out.fail(f"{law} at {a}, {b}, {c}")
        for x in g.lassos(3):
            if (x in a.join(b)) != (x in a or x in b) or (x in a.meet(b)) != (x in a and x in b):
                out.fail(f"membership of {x} in {a}, {b}")
                break
    return out


@prop("stone", "rho-round-trip")
def rho_round_trip(ctx: Context) -> Outcome:
    g, out = ctx.graph, Outcome()
    for x in g.lassos(8 if len(g.edges) < 3 else 6):
        out.cases += 1
        chain = rho(x)
        if rho_inverse(chain) != x:
            out.fail(str(x))
        for m in range(5):
            nbhd = CompactOpen.of(g, [x.head(m)])
            if nbhd not in chain or x not in CompactOpen.of(g, [chain.member(m)]):
                out.fail(f"{x} at depth {m}")
                break
    return out


def _specs_on(graph: Graph, ring: Ring) -> list[IsoSpec]:
    specs = [s for s in positive_specs() if s.source == graph]
    if ring is ZI and not any(s.ring is ZI for s in specs):
        specs.append(identity_spec(graph, ZI, "conjugation", name=f"conjugate-{graph.name}"))
    if not specs:
        specs.append(identity_spec(graph, ring, name=f"identity-{graph.name}"))
    return specs


def kappa_laws(spec: IsoSpec, points: list[Lasso], depth: int, normalizers: list[Element]) -> list[str]:
    """Failures of the defining law of kappa and of its compatibility with
    isolated projections, domains and the partial action."""
    E, F, ring = spec.source, spec.target, spec.ring
    bad = []
    for x in points:
        kx = spec.kappa(x)
        bad += [f"{spec.name}: {x} in L but kappa(x) = {kx} gives {w}"
                for w in kappa_iff_violations(spec, x, depth, kx)[:1]]
        if E.is_isolated(x):
            px = isolate(E, x).projection(E, ring)
            if not F.is_isolated(kx) or spec.extend(px) != isolate(F, kx).projection(F, ring):
                bad.append(f"{spec.name}: pi(p_x) != p_kappa(x) at {x}")
    for n in normalizers:
        an = alpha(n)
        pn = alpha(spec.extend(n))
        for x in points:
            kx = spec.kappa(x)
            if (x in an) != (kx in pn):
                bad.append(f"{spec.name}: domain of {n} at {x}")
            elif x in an and spec.kappa(an(x)) != pn(kx):
                bad.append(f"{spec.name}: kappa(alpha_n(x)) != alpha_pi(n)(kappa(x)) at {x}, n = {n}")
    return bad


@prop("stone", "kappa")
def kappa_prop(ctx: Context) -> Outcome:
    g, out = ctx.graph, Outcome()
    points = list(g.lassos(4))
    ctx.rng.shuffle(points)
    points = points[:min(len(points), ctx.count)]
    for spec in _specs_on(g, ctx.ring):
        validate_pi(spec)
        norms = [random_normalizer(g, spec.ring, ctx.rng) for _ in range(max(3, ctx.count // 4))]
        out.cases += len(points)
        out.failures += kappa_laws(spec, points, 3, norms)
    return out


# -- iso --------------------------------------------------------------------

@prop("iso", "corpus")
def corpus_prop(ctx: Context) -> Outcome:
    out = Outcome()
    for spec in _specs_on(ctx.graph, ctx.ring):
        out.cases += 1
        report = validate_pi(spec, 3)
        if not report.passed:
            out.fail(f"{spec.name}: {report.failures()[0]}")
    for spec in negative_specs():
        if spec.source != ctx.graph:
            continue
        out.cases += 1
        if validate_pi(spec, 3).passed:
            out.fail(f"{spec.name} was accepted")
    return out


def round_trip_failures(spec: IsoSpec, rng: random.Random, samples: int, depth: int = 3,
                        table_depth: int = 2) -> list[str]:
    """Everything that can go wrong going from ``spec`` to a groupoid map and back."""
    bad = []
    report = validate_pi(spec, depth)
    if not report.passed:
        return [f"{spec.name}: {report.failures()[0]}"]
    om = groupoid_iso_from_pi(spec, table_depth)
    bad += [f"{spec.name}: {w}" for w in homomorphism_violations(om, table_depth)[:2]]
    pairs = random_composable_pairs(spec.source, samples, rng, 3)
    bad += [f"{spec.name}: {w}" for w in sample_arrow_violations(om, pairs)[:2]]
    back = pi_from_groupoid_iso(om, spec.ring)
    report = validate_pi(back, depth)
    if not report.passed:
        bad.append(f"{spec.name}: recovered map fails {report.failures()[0]}")
        return bad
    again = groupoid_iso_from_pi(back, table_depth)
    for key, img in om.table(table_depth).items():
        if again.image_of(*key) != img:
            bad.append(f"{spec.name}: Z({key[0]},{key[1]}) -> {img} then {again.image_of(*key)}")
            break
    return bad


@prop("iso", "round-trip")
def round_trip_prop(ctx: Context) -> Outcome:
    out = Outcome()
    g = ctx.graph
    specs = _specs_on(g, ctx.ring)
    h, vmap, emap = renamed(g)
    specs.append(graph_map_spec(g, h, vmap, emap, ctx.ring, name=f"rename-{g.name}"))
    for spec in specs:
        out.cases += 1
        out.failures += round_trip_failures(spec, ctx.rng, ctx.count)
    return out


# -- running ----------------------------------------------------------------

def properties(suite: str = "all") -> list[str]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    return sorted(name for name, (s, _) in REGISTRY.items() if suite in ("all", s))


def run_property(name: str, graph: Graph, ring: Ring, seed: int, count: int) -> Outcome:
    _, fn = REGISTRY[name]
    rng = random.Random(f"{seed}:{graph.name}:{ring.name}:{name}")
    try:
        return fn(Context(graph, ring, rng, count))
    except OutsideDomain as exc:  # a sampler mistake surfaces as a failure, not a crash
        return Outcome(0, [f"raised {exc!r}"])


def run_suite(suite: str, graph: Graph, ring: Ring, seed: int = 0, count: int = 20) -> list[tuple[str, Outcome]]:
    return [(name, run_property(name, graph, ring, seed, count)) for name in properties(suite)]


def format_report(results: list[tuple[str, Outcome]], header: str = "") -> str:
    lines = [header] if header else []
    for name, res in results:
        tail = f": {res.failures[0]}" if res.failures else ""
        more = f" (+{len(res.failures) - 1} more)" if len(res.failures) > 1 else ""
        lines.append(f"{'PASS' if res.passed else 'FAIL'} {name} [{res.cases} cases]{tail}{more}")
    passed = sum(r.passed for _, r in results)
    verdict = "PASS" if passed == len(results) else "FAIL"
    lines.append(f"{verdict} {passed}/{len(results)} properties")
    return "\n".join(lines)


__all__ = ["Context", "Outcome", "REGISTRY", "SUITES", "REFERENCE_GRAPHS", "properties",
           "run_property", "run_suite", "format_report", "kappa_laws", "round_trip_failures"]
