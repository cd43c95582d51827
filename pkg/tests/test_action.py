from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import G_2LOOP, G_CYCLE2E, G_LOOP, el, lasso
from leavitt import oracles
from leavitt.action import (PartialMap, alpha, apply_alpha, compose_diagonal, compress,
                            compress_scalar, dom, finite_cylinder_points, is_normalizer,
                            is_normalizer_bounded, is_normalizer_structural, isolate, ran)
from leavitt.corpus import REFERENCE_GRAPHS
from leavitt.errors import NotANormalizer, NotIsolated, NotZeroGraded, OutsideDomain
from leavitt.rings import ZZ
from leavitt.sampling import random_cylinder_sum, random_diagonal, random_normalizer
from leavitt.steinberg import Element

g = G_2LOOP
P = g.path


def test_normalizer_examples():
    assert is_normalizer(el(g, "1*[a|b]"))
    n = el(g, "1*[a|v] + 1*[b|v]")
    assert (n * n.star()) == el(g, "1*[a|a] + 1*[a|b] + 1*[b|a] + 1*[b|b]")
    assert not is_normalizer(n)
    rng = random.Random(0)
    for _ in range(20):
        assert is_normalizer(random_diagonal(g, ZZ, rng))


def test_dom_ran():
    n = el(g, "1*[a|b]")
    assert dom(n) == {P("b")} and ran(n) == {P("a")}
    assert dom(Element.zero(g)) == frozenset()
    with pytest.raises(NotANormalizer):
        dom(el(g, "1*[a|v] + 1*[b|v]"))


def test_alpha_examples():
    assert alpha(el(g, "1*[a|b]"))(lasso(g, "b(a)^inf")) == lasso(g, "(a)^inf")
    d = el(g, "2*[a|a] + 1*[b.a|b.a]")
    for x in g.lassos(4):
        if x in alpha(d):
            assert alpha(d)(x) == x
    e_inf = lasso(G_LOOP, "(e)^inf")
    assert alpha(el(G_LOOP, "1*[e|v]"))(e_inf) == e_inf


def test_partial_map():
    pm = PartialMap(g, ((P("b"), P("a")),))
    x = lasso(g, "(b)^inf")
    assert apply_alpha(pm, x) == lasso(g, "a(b)^inf")
    assert apply_alpha(pm.inverse(), apply_alpha(pm, x)) == x
    with pytest.raises(OutsideDomain):
        apply_alpha(pm, lasso(g, "(a)^inf"))


def test_compress_examples():
    x = lasso(G_LOOP, "(e)^inf")
    ip = isolate(G_LOOP, x)
    assert compress(ip, el(G_LOOP, "1*[e|v]")) == (1, 1)
    assert compress(ip, el(G_LOOP, "5*[v|v]")) == (5, 0)
    assert compress_scalar(ip, el(G_LOOP, "2*[v|v]")) == 2
    assert compress_scalar(ip, el(G_LOOP, "1*[e.e|e.e]")) == 1
    assert compress_scalar(ip, Element.zero(G_LOOP)) == 0
    with pytest.raises(NotZeroGraded):
        compress_scalar(ip, el(G_LOOP, "1*[e|v]"))
    y = lasso(G_CYCLE2E, "(h)^inf")
    assert compress(isolate(G_CYCLE2E, y), el(G_CYCLE2E, "1*[e|e]")) is None
    with pytest.raises(NotIsolated):
        isolate(g, lasso(g, "(a)^inf"))


def test_finite_cylinder_points():
    assert finite_cylinder_points(G_LOOP, G_LOOP.vertex("v")) == [lasso(G_LOOP, "(e)^inf")]
    assert finite_cylinder_points(g, P("a")) is None
    pts = finite_cylinder_points(G_CYCLE2E, G_CYCLE2E.vertex("w"))
    assert pts == [lasso(G_CYCLE2E, "(h)^inf")]


# -- properties -------------------------------------------------------------

GRAPHS = list(REFERENCE_GRAPHS.values())
cases = st.tuples(st.sampled_from(GRAPHS), st.integers(0, 2**32 - 1))


@settings(max_examples=150, deadline=None)
@given(cases)
def test_structural_test_matches_depth_sweep(case):
    graph, seed = case
    rng = random.Random(seed)
    n = random_cylinder_sum(graph, ZZ, rng, terms=rng.randint(1, 3))
    if seed % 2:
        n = n + random_normalizer(graph, ZZ, rng)
    verdicts = oracles.normalizer_by_depths(n, 2)
    assert len(set(verdicts)) == 1
    assert is_normalizer_structural(n) == is_normalizer_bounded(n) == verdicts[0]


@settings(max_examples=100, deadline=None)
@given(cases)
def test_support_in_isotropy(case):
    graph, seed = case
    rng = random.Random(seed)
    n = random_normalizer(graph, ZZ, rng)
    for y in graph.lassos(4):
        # arrows of supp(n) with source y, then with range y
        ranges = {y.shift(len(nu)).prepend(mu) for mu, nu, _ in n.items() if y.extends(nu)}
        sources = {y.shift(len(mu)).prepend(nu) for mu, nu, _ in n.items() if y.extends(mu)}
        assert len(ranges) <= 1 and len(sources) <= 1, (n, y)


@settings(max_examples=100, deadline=None)
@given(cases)
def test_conjugation_formula(case):
    graph, seed = case
    rng = random.Random(seed)
    n, d = random_normalizer(graph, ZZ, rng), random_diagonal(graph, ZZ, rng)
    assert n.star() * d * n == compose_diagonal(d, alpha(n)) * (n.star() * n)


@settings(max_examples=100, deadline=None)
@given(cases)
def test_action_is_multiplicative(case):
    graph, seed = case
    rng = random.Random(seed)
    n, m = random_normalizer(graph, ZZ, rng), random_normalizer(graph, ZZ, rng)
    an, am, amn = alpha(n), alpha(m), alpha(m * n)
    inverse = alpha(n.star())
    for x in graph.lassos(4):
        assert (x in amn) == (x in an and an(x) in am)
        if x in amn:
            assert amn(x) == am(an(x))
        if x in an:
            assert inverse(an(x)) == x


@pytest.mark.parametrize("graph", [G_LOOP, G_CYCLE2E], ids=lambda g: g.name)
def test_isolated_projection_intertwines(graph):
    rng = random.Random(11)
    points = [x for x in graph.lassos(4) if graph.is_isolated(x)]
    assert points
    for _ in range(50):
        n = random_normalizer(graph, ZZ, rng)
        an = alpha(n)
        for x in points:
            ip = isolate(graph, x)
            px = ip.projection(graph, ZZ)
            c = compress(ip, n)
            if c is not None:
                assert c[1] % len(x.cycle) == 0
            if x in an:
                py = isolate(graph, an(x)).projection(graph, ZZ)
                assert n * px == py * n
                assert n * px * n.star() == n * n.star() * py
