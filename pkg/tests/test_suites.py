"""
Tests for the orthogonal idempotent decompositions of YY, ZZ and YZ.
"""

import pytest

from foldsoergel import grring
from foldsoergel.errors import UnknownNameError
from foldsoergel.foldcat import expr as ex
from foldsoergel.foldcat import suites


@pytest.mark.parametrize("pair", sorted(suites.SUITES))
def test_suite_checks(pair):
    report = suites.check_suite(pair)
    assert report["complete"]
    assert report["orthogonal"]
    assert all(report["factor_through"])
    assert all(report["degrees"])
    assert report["ok"]


@pytest.mark.parametrize("pair", sorted(suites.SUITES))
def test_summands_match_ring_decomposition(pair):
    expected = grring.decompose_word(pair)
    found = {}
    for entry in suites.idempotent_suite(pair):
        key = (entry.through, entry.shift)
        found[key] = found.get(key, 0) + 1
    assert found == dict(expected)


def test_idempotents_are_endomorphisms():
    for pair, entries in suites.SUITES.items():
        for entry in entries:
            s = ex.shape(entry.idempotent())
            assert (s.source, s.target, s.degree) == (pair, pair, 0)


def test_labels():
    labels = [e.label() for e in suites.idempotent_suite("ZZ")]
    assert labels == ["Z[-2]", "Z", "Z[2]", "XZ"]


def test_unknown_pair():
    with pytest.raises(UnknownNameError):
        suites.idempotent_suite("XX")


def test_projections_land_in_the_summand():
    for pair, entries in suites.SUITES.items():
        for entry in entries:
            pi = ex.shape(ex.parse_expr(entry.projection))
            iota = ex.shape(ex.parse_expr(entry.inclusion))
            word = entry.through.replace("*", "")
            assert (pi.source, pi.target) == (pair, word)
            assert (iota.source, iota.target) == (word, pair)
