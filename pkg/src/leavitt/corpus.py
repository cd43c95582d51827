"""Reference graphs and a corpus of isomorphism specs, including two broken
ones that any validator must reject."""

from __future__ import annotations

from .graph import Graph
from .iso import IsoSpec
from .rings import ZI, ZZ, Ring
from .steinberg import Element


def loop() -> Graph:
    """One vertex with one loop: every infinite path is isolated."""
    return Graph(["v"], {"e": ("v", "v")}, "g_loop")


def two_loops() -> Graph:
    return Graph(["v"], {"a": ("v", "v"), "b": ("v", "v")}, "g_2loop")


def two_cycle() -> Graph:
    """``u`` and ``v`` joined by ``e`` (range u) and ``f`` (range v)."""
    return Graph(["u", "v"], {"e": ("u", "v"), "f": ("v", "u")}, "g_cycle2")


def two_cycle_with_entry() -> Graph:
    """The two-cycle plus a loop ``h`` at ``w`` feeding ``u`` through ``g``.

    Paths ending in ``h h h ...`` are isolated; the rest are not.
    """
    return Graph(["u", "v", "w"],
                 {"e": ("u", "v"), "f": ("v", "u"), "g": ("u", "w"), "h": ("w", "w")},
                 "g_cycle2e")


G_LOOP = loop()
G_2LOOP = two_loops()
G_CYCLE2 = two_cycle()
G_CYCLE2E = two_cycle_with_entry()

REFERENCE_GRAPHS = {g.name: g for g in (G_LOOP, G_2LOOP, G_CYCLE2, G_CYCLE2E)}


def renamed(g: Graph, suffix: str = "1") -> tuple[Graph, dict[str, str], dict[str, str]]:
    vmap = {v: v + suffix for v in g.vertices}
    emap = {e: e + suffix for e in g.edges}
    h = Graph(vmap.values(), {emap[e]: (vmap[g.r(e)], vmap[g.s(e)]) for e in g.edges},
              g.name + "_renamed")
    return h, vmap, emap


# -- spec constructors -----------------------------------------------------

def identity_spec(g: Graph, ring: Ring = ZZ, twist: str = "identity", name: str = "") -> IsoSpec:
    def one_way(inverse_of=None):
        p = {v: Element.vertex(g, v, ring) for v in g.vertices}
        s = {e: Element.edge(g, e, ring) for e in g.edges}
        t = {e: Element.ghost(g, e, ring) for e in g.edges}
        return IsoSpec(g, g, ring, p, s, t, twist, inverse_of, name)

    spec = one_way()
    spec.inverse = one_way(spec)
    return spec


def graph_map_spec(src: Graph, tgt: Graph, vmap: dict, emap: dict, ring: Ring = ZZ,
                   name: str = "", with_inverse: bool = True) -> IsoSpec:
    p = {v: Element.vertex(tgt, vmap[v], ring) for v in src.vertices}
    s = {e: Element.edge(tgt, emap[e], ring) for e in src.edges}
    t = {e: Element.ghost(tgt, emap[e], ring) for e in src.edges}
    spec = IsoSpec(src, tgt, ring, p, s, t, "identity", name=name)
    if with_inverse:
        back = graph_map_spec(tgt, src, {b: a for a, b in vmap.items()},
                              {b: a for a, b in emap.items()}, ring, name + "^-1", False)
        back.inverse = spec
        spec.inverse = back
    return spec


def conjugation_spec(g: Graph, u: Element, name: str = "", with_inverse: bool = True) -> IsoSpec:
    """``f -> u f u*`` for a unitary ``u`` that normalizes the diagonal."""
    ring = u.ring
    us = u.star()
    p = {v: u * Element.vertex(g, v, ring) * us for v in g.vertices}
    s = {e: u * Element.edge(g, e, ring) * us for e in g.edges}
    t = {e: u * Element.ghost(g, e, ring) * us for e in g.edges}
    spec = IsoSpec(g, g, ring, p, s, t, "identity", name=name)
    if with_inverse:
        back = conjugation_spec(g, us, name + "^-1", False)
        back.inverse = spec
        spec.inverse = back
    return spec


def thompson_unitary(ring: Ring = ZZ) -> Element:
    """``1_{Z(aa,a)} + 1_{Z(ab,ba)} + 1_{Z(b,bb)}`` on the two-loop graph."""
    g = G_2LOOP
    P = g.path
    return Element.from_terms(g, [(P("aa"), P("a"), ring.one),
                                  (P("ab"), P("ba"), ring.one),
                                  (P("b"), P("bb"), ring.one)], ring)


def duplicate_edge_spec() -> IsoSpec:
    """Both edges of the two-loop graph sent to ``1_{Z(a, v)}``: breaks (L3)."""
    g = G_2LOOP
    a, v = g.path("a"), g.vertex("v")
    s_img = Element.cylinder(g, a, v)
    t_img = Element.cylinder(g, v, a)
    return IsoSpec(g, g, ZZ, {"v": Element.vertex(g, "v")}, {"a": s_img, "b": s_img},
                   {"a": t_img, "b": t_img}, name="duplicate-edge")


def skew_spec() -> IsoSpec:
    """A Leavitt family that is not *-compatible and moves the diagonal off itself.

    ``S_a = s_a``, ``S_b = s_b + s_a``, ``T_a = s_a* - s_b*``, ``T_b = s_b*``
    satisfy (L1)-(L4) but ``S_a T_a = 1_{Z(a,a)} - 1_{Z(a,b)}`` is not diagonal.
    """
    g = G_2LOOP
    P, v = g.path, g.vertex("v")
    s_a = Element.cylinder(g, P("a"), v)
    s_b = Element.cylinder(g, P("b"), v)
    return IsoSpec(g, g, ZZ, {"v": Element.vertex(g, "v")},
                   {"a": s_a, "b": s_b + s_a},
                   {"a": s_a.star() - s_b.star(), "b": s_b.star()},
                   name="skew")


def positive_specs() -> list[IsoSpec]:
    specs = []
    for g in REFERENCE_GRAPHS.values():
        specs.append(identity_spec(g, name=f"identity-{g.name}"))
    specs.append(identity_spec(G_2LOOP, ZI, "conjugation", name="conjugate-g_2loop"))
    swap = graph_map_spec(G_2LOOP, G_2LOOP, {"v": "v"}, {"a": "b", "b": "a"}, name="swap-g_2loop")
    specs.append(swap)
    specs.append(graph_map_spec(G_CYCLE2, G_CYCLE2, {"u": "v", "v": "u"}, {"e": "f", "f": "e"},
                                name="swap-g_cycle2"))
    for g in (G_LOOP, G_CYCLE2E):
        h, vmap, emap = renamed(g)
        specs.append(graph_map_spec(g, h, vmap, emap, name=f"rename-{g.name}"))
    specs.append(conjugation_spec(G_2LOOP, thompson_unitary(), name="thompson-g_2loop"))
    return specs


def negative_specs() -> list[IsoSpec]:
    return [duplicate_edge_spec(), skew_spec()]


def spec_named(name: str) -> IsoSpec:
    for spec in positive_specs() + negative_specs():
        if spec.name == name:
            return spec
    raise KeyError(name)
