"""The frozen convention record and the cache-flushing override hook."""

import dataclasses

import pytest

from qminor.conventions import Convention, active, set_convention
from qminor.scalars import RatScalar
from qminor.rootdata import CartanDatum, longest_word
from qminor.pbw import dual_pbw_normalizer


def test_default_convention_is_normalized():
    conv = active()
    assert conv.pairing_exp == -1
    assert conv.k_pairing_sign == -1
    assert conv.normalizer_strip is True
    assert conv.root_unit_exp == 1


def test_convention_is_frozen():
    with pytest.raises(dataclasses.FrozenInstanceError):
        active().normalizer_strip = False


def test_override_flushes_caches():
    w = longest_word(CartanDatum("A2"))
    stripped = dual_pbw_normalizer(w, (1, 0, 0))
    assert stripped.eval_at_zero() == 1
    old = active()
    try:
        set_convention(dataclasses.replace(old, normalizer_strip=False))
        raw = dual_pbw_normalizer(w, (1, 0, 0))
        # the raw reciprocal pairing differs from the stripped one by a unit
        assert raw != stripped
        u = raw / stripped
        e = (-u).is_q_power() if u.is_q_power() is None else u.is_q_power()
        assert e is not None
    finally:
        set_convention(old)
    assert dual_pbw_normalizer(w, (1, 0, 0)) == stripped
