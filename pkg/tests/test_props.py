from __future__ import annotations

import pytest

from leavitt.props import SUITES, format_report, properties, run_property, run_suite
from leavitt.rings import ZI, ZZ


@pytest.mark.parametrize("ring", [ZZ, ZI], ids=["int", "gauss"])
@pytest.mark.parametrize("suite", SUITES)
def test_suite_passes(graph, suite, ring):
    results = run_suite(suite, graph, ring, seed=1, count=8)
    failures = [f"{name}: {o.failures[0]}" for name, o in results if not o.passed]
    assert not failures, "\n".join(failures)


def test_registry_covers_every_suite():
    for suite in SUITES:
        assert properties(suite)
    assert len(properties()) == sum(len(properties(s)) for s in SUITES)
    with pytest.raises(ValueError):
        properties("nonsense")


def test_runs_are_reproducible(graph):
    a = run_property("weyl.phi", graph, ZZ, seed=3, count=5)
    b = run_property("weyl.phi", graph, ZZ, seed=3, count=5)
    assert (a.cases, a.failures) == (b.cases, b.failures)


def test_report_format(graph):
    results = run_suite("ring", graph, ZZ, count=3)
    text = format_report(results, "header").splitlines()
    assert text[0] == "header"
    assert text[-1] == f"PASS {len(results)}/{len(results)} properties"
