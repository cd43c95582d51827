from __future__ import annotations

import itertools

from hypothesis import given, settings, strategies as st

from leavitt.rings import ZI, ZZ, Gaussian, ring_named


def test_conjugation_examples():
    assert ZZ.conj(1) == 1 and ZI.conj(ZI.one) == ZI.one
    assert ZI.conj(Gaussian(2, 3)) == Gaussian(2, -3)
    assert ZI.mul(Gaussian(2, 1), Gaussian(2, -1)) == ZI.coerce(5)


def test_parse_and_format():
    for text in ("0", "-7", "i", "-i", "2+3i", "2-3i", "-4i"):
        assert ZI.format(ZI.parse(text)) == text
    assert ring_named("gauss") is ZI and ring_named("int") is ZZ


def test_no_overflow():
    big = ZZ.mul(2**200, 3**150)
    assert big == 2**200 * 3**150
    z = ZI.mul(Gaussian(10**40, 1), Gaussian(10**40, -1))
    assert z == ZI.coerce(10**80 + 1)


def test_gaussian_integral_domain_exhaustive():
    box = [Gaussian(a, b) for a, b in itertools.product(range(-5, 6), repeat=2)]
    for r, s in itertools.product(box, box):
        if ZI.is_zero(ZI.mul(r, s)):
            assert ZI.is_zero(r) or ZI.is_zero(s)


ints = st.integers(-10**6, 10**6)
gauss = st.builds(Gaussian, ints, ints)


@settings(max_examples=1000)
@given(gauss, gauss)
def test_involution_laws(r, s):
    assert ZI.conj(ZI.conj(r)) == r
    assert ZI.conj(ZI.mul(r, s)) == ZI.mul(ZI.conj(r), ZI.conj(s))
    assert ZI.conj(ZI.add(r, s)) == ZI.add(ZI.conj(r), ZI.conj(s))


@settings(max_examples=300)
@given(gauss, gauss, gauss)
def test_ring_axioms(r, s, t):
    assert ZI.mul(r, ZI.add(s, t)) == ZI.add(ZI.mul(r, s), ZI.mul(r, t))
    assert ZI.mul(ZI.mul(r, s), t) == ZI.mul(r, ZI.mul(s, t))
    assert ZI.add(r, ZI.neg(r)) == ZI.zero
