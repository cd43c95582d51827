from __future__ import annotations

import pytest

from leavitt.corpus import G_2LOOP, G_CYCLE2, G_CYCLE2E, G_LOOP, REFERENCE_GRAPHS
from leavitt.literals import parse_arrow, parse_element, parse_lasso
from leavitt.rings import ZI, ZZ


def el(g, text, ring=ZZ):
    return parse_element(g, text, ring)


def lasso(g, text):
    return parse_lasso(g, text)


def arrow(g, text):
    return parse_arrow(g, text)


@pytest.fixture(params=list(REFERENCE_GRAPHS), ids=list(REFERENCE_GRAPHS))
def graph(request):
    return REFERENCE_GRAPHS[request.param]


@pytest.fixture(params=[ZZ, ZI], ids=["int", "gauss"])
def ring(request):
    return request.param


__all__ = ["G_2LOOP", "G_CYCLE2", "G_CYCLE2E", "G_LOOP", "arrow", "el", "lasso"]
