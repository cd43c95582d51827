from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import G_2LOOP, G_LOOP, el, lasso
from leavitt.corpus import REFERENCE_GRAPHS, identity_spec, spec_named
from leavitt.errors import NotIdempotent
from leavitt.iso import validate_pi
from leavitt.rings import ZI
from leavitt.sampling import random_diagonal
from leavitt.stone import (CompactOpen, check_kappa_linearity, idempotent_to_set, induce_kappa,
                           join, kappa_iff_violations, leq, meet, rho, rho_inverse,
                           set_to_idempotent)

g = G_2LOOP
P = g.path


def co(*words):
    return CompactOpen.of(g, [P(w) if w != "v" else g.vertex("v") for w in words])


def test_lattice_examples():
    assert meet(co("a"), co("ab")) == co("ab")
    assert join(co("a"), co("b")) == co("v")
    assert str(join(co("a"), co("b"))) == "{v}"
    assert leq(co("ab"), co("a")) and not leq(co("a"), co("ab"))


def test_idempotents():
    assert idempotent_to_set(el(g, "1*[a|a]")) == co("a")
    with pytest.raises(NotIdempotent):
        idempotent_to_set(el(g, "2*[a|a]"))
    assert set_to_idempotent(co("a", "b")) == el(g, "1*[v|v]")
    assert set_to_idempotent(co("a", "b")) == el(g, "1*[a|a] + 1*[b|b]")


def test_filter_chains():
    x = lasso(G_LOOP, "(e)^inf")
    assert rho_inverse(rho(x)) == x
    y = lasso(g, "a(b)^inf")
    assert rho_inverse(rho(y)) == y
    for m in range(6):
        tau = rho(y).member(m)
        assert CompactOpen.of(g, [tau]) in rho(y) and y.extends(tau)


@pytest.mark.parametrize("graph", list(REFERENCE_GRAPHS.values()), ids=list(REFERENCE_GRAPHS))
def test_rho_round_trip_all_small_lassos(graph):
    for x in graph.lassos(8):
        assert rho_inverse(rho(x)) == x


def test_kappa_identity_and_swap():
    ident = identity_spec(g)
    validate_pi(ident)
    for x in g.lassos(4):
        assert induce_kappa(ident, x) == x
    swap = spec_named("swap-g_2loop")
    validate_pi(swap)
    assert induce_kappa(swap, lasso(g, "a.b(a)^inf")) == lasso(g, "b.a(b)^inf")
    for x in g.lassos(4):
        assert not kappa_iff_violations(swap, x, 3)


def test_kappa_linearity():
    ident = identity_spec(g)
    assert check_kappa_linearity(ident, 3)
    assert check_kappa_linearity(spec_named("swap-g_2loop"), 3)
    twisted = identity_spec(g, ZI, "conjugation")
    assert validate_pi(twisted).passed
    assert not check_kappa_linearity(twisted, 3)
    d = el(g, "i*[v|v]", ZI)
    x = lasso(g, "(a)^inf")
    assert twisted.extend(d).value_at_unit(induce_kappa(twisted, x)) == ZI.parse("-i")


def test_support_law_under_swap():
    swap = spec_named("swap-g_2loop")
    validate_pi(swap)
    rng = random.Random(5)
    points = g.lassos(4)
    for _ in range(50):
        d = random_diagonal(g, swap.ring, rng)
        image = swap.extend(d)
        for x in points:
            assert (d.value_at_unit(x) != 0) == (image.value_at_unit(induce_kappa(swap, x)) != 0)


# -- properties -------------------------------------------------------------

GRAPHS = list(REFERENCE_GRAPHS.values())


def _random_open(graph, rng):
    paths = list(graph.paths_upto(3))
    return CompactOpen.of(graph, rng.sample(paths, rng.randint(0, 4)))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(GRAPHS), st.integers(0, 2**32 - 1))
def test_boolean_algebra_laws(graph, seed):
    rng = random.Random(seed)
    a, b, c = (_random_open(graph, rng) for _ in range(3))
    assert meet(a, meet(b, c)) == meet(meet(a, b), c)
    assert join(a, join(b, c)) == join(join(a, b), c)
    assert join(a, meet(a, b)) == a and meet(a, join(a, b)) == a
    assert meet(a, join(b, c)) == join(meet(a, b), meet(a, c))
    assert join(a, meet(b, c)) == meet(join(a, b), join(a, c))
    # pointwise semantics on lassos
    for x in graph.lassos(3):
        assert (x in meet(a, b)) == (x in a and x in b)
        assert (x in join(a, b)) == (x in a or x in b)
