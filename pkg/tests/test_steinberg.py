from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import G_2LOOP, G_LOOP, arrow, el
from leavitt import oracles
from leavitt.corpus import REFERENCE_GRAPHS
from leavitt.errors import MixedRings
from leavitt.rings import ZI, ZZ
from leavitt.sampling import random_cylinder_sum, random_diagonal
from leavitt.steinberg import Element, format_element, leavitt_family, leavitt_violations

g = G_2LOOP
P = g.path
v = g.vertex("v")


def test_from_terms_normalizes_to_longest_nu():
    f = Element.from_terms(g, [(v, v, 1), (P("a"), P("a"), 1)])
    assert format_element(f) == "2*[a|a] + 1*[b|b]"
    assert all(len(nu) == 1 for _, nu in f.terms)


def test_from_terms_examples():
    assert not Element.from_terms(g, [(P("a"), P("b"), 1), (P("a"), P("b"), -1)])
    f = Element.from_terms(G_LOOP, [(G_LOOP.path("e"), G_LOOP.vertex("v"), 1)])
    assert format_element(f) == "1*[e|v]"


def test_products():
    assert el(g, "1*[a|b]") * el(g, "1*[b|v]") == el(g, "1*[a|v]")
    assert not el(g, "1*[v|a]") * el(g, "1*[b|v]")
    f = el(g, "3*[a|b.a] + -1*[b.b|b]")
    assert f * el(g, "1*[v|v]") == f


def test_star():
    assert el(g, "1*[a|b]").star() == el(g, "1*[b|a]")
    assert el(g, "(2+i)*[a|v]", ZI).star() == el(g, "(2-i)*[v|a]", ZI)


def test_addition():
    f = el(g, "2*[a|b] + 1*[b.a|a]")
    assert not f + f.scale(-1)
    assert not f.scale(0)
    assert el(g, "1*[a|a]") + el(g, "1*[b|b]") == Element.from_terms(g, [(v, v, 1)])


def test_mixed_rings_rejected():
    with pytest.raises(MixedRings):
        el(g, "1*[a|a]") + el(g, "1*[a|a]", ZI)


def test_degree():
    assert el(g, "1*[a.b|a]").degree() == 1
    assert el(g, "1*[a|v] + 1*[v|a]").degree() is None
    assert Element.zero(g).degree() == 0
    rng = random.Random(3)
    for _ in range(20):
        assert random_diagonal(g, ZZ, rng).degree() == 0


def test_diagonal_and_support():
    assert el(g, "1*[a|a] + 2*[b|b]").is_diagonal()
    assert not el(g, "1*[a|b]").is_diagonal()
    assert el(g, "1*[a|a]").support_units() == {P("a")}


def test_evaluate():
    f = el(g, "1*[a|b]")
    assert f.evaluate(arrow(g, "((a)^inf, 0, b(a)^inf)")) == 1
    assert f.evaluate(arrow(g, "((a)^inf, 0, (a)^inf)")) == 0


def test_format_gaussian_coefficients():
    f = el(g, "(1+i)*[a|a] + -1*[b|b] + i*[a|b]", ZI)
    assert format_element(f) == "(1+i)*[a|a] + i*[a|b] + -1*[b|b]"


def test_leavitt_family(graph, ring):
    p, s, t = leavitt_family(graph, ring)
    assert leavitt_violations(graph, p, s, t) == []
    for e in graph.edges:
        # ghost edges are 1_{Z(s(e), e)}
        assert t[e] == Element.cylinder(graph, graph.vertex(graph.s(e)), graph.path(e), ring=ring)


# -- properties -------------------------------------------------------------

GRAPHS = list(REFERENCE_GRAPHS.values())
cases = st.tuples(st.sampled_from(GRAPHS), st.sampled_from([ZZ, ZI]), st.integers(0, 2**32 - 1))


def _three(case):
    graph, ring, seed = case
    rng = random.Random(seed)
    return [random_cylinder_sum(graph, ring, rng) for _ in range(3)]


@settings(max_examples=200, deadline=None)
@given(cases)
def test_ring_axioms(case):
    f, h, k = _three(case)
    assert (f * h) * k == f * (h * k)
    assert f * (h + k) == f * h + f * k
    assert (f + h) * k == f * k + h * k


@settings(max_examples=200, deadline=None)
@given(cases)
def test_star_laws(case):
    f, h, _ = _three(case)
    ring = f.ring
    r = ring.parse("2-3i") if ring is ZI else 5
    assert (f * h).star() == h.star() * f.star()
    assert (f + h).star() == f.star() + h.star()
    assert f.scale(r).star() == f.star().scale(ring.conj(r))
    assert f.star().star() == f


@settings(max_examples=200, deadline=None)
@given(cases)
def test_grading(case):
    f, h, _ = _three(case)
    total = Element.zero(f.graph, f.ring)
    for k in f.degrees():
        total = total + f.component(k)
    assert total == f
    df, dh = f.component(1), h.component(-1)
    if df and dh and df * dh:
        assert (df * dh).degree() == 0


@settings(max_examples=200, deadline=None)
@given(cases)
def test_convolution_matches_pointwise_sum(case):
    f, h, _ = _three(case)
    prod = f * h
    for gamma in oracles.sample_arrows(prod) + oracles.sample_arrows(h):
        assert prod.evaluate(gamma) == oracles.pointwise_product(f, h, gamma)
