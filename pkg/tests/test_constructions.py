"""Seed registry and simplex-juxtaposition construction checks."""

import json

import pytest

from soembed.constructions import (
    SeedRegistry,
    build_optimal,
    juxtapose_simplex,
    registry,
)
from soembed.distances import d_opt, dso_opt
from soembed.errors import MissingSeedError, SoEmbedError
from soembed.gf2 import gram, min_distance, parse_matrix, rank, simplex_matrix


def test_registry_loads_and_validates():
    reg = registry()
    assert reg.lengths(3, False) == list(range(3, 10))
    assert reg.lengths(4, True) == list(range(8, 23)) + [28]
    for entry in reg.entries.values():
        assert rank(entry.matrix) == entry.k
        assert min_distance(entry.matrix) == entry.declared_d


def test_registry_rejects_tampered_seed(tmp_path):
    sub = tmp_path / "k3" / "lin"
    sub.mkdir(parents=True)
    (sub / "t7.txt").write_text(simplex_matrix(3).to_text() + "\n")
    (sub / "t7.json").write_text(
        json.dumps({"t": 7, "k": 3, "so": False, "declared_d": 5})
    )
    with pytest.raises(SoEmbedError):
        SeedRegistry.load(tmp_path)


def test_registry_env_override(tmp_path, monkeypatch):
    sub = tmp_path / "k3" / "so"
    sub.mkdir(parents=True)
    (sub / "t7.txt").write_text(simplex_matrix(3).to_text() + "\n")
    (sub / "t7.json").write_text(
        json.dumps({"t": 7, "k": 3, "so": True, "declared_d": 4})
    )
    monkeypatch.setenv("SO_EMBED_SEED_DIR", str(tmp_path))
    reg = SeedRegistry.load()
    assert reg.lengths(3, True) == [7]


def test_juxtapose_examples():
    h3 = simplex_matrix(3)
    doubled = juxtapose_simplex(h3, 1)
    assert doubled.n == 14 and min_distance(doubled) == 8
    assert juxtapose_simplex(h3, 0) == h3

    ext_hamming = parse_matrix("00001111\n00110011\n01010101\n10010110")
    j = juxtapose_simplex(ext_hamming, 1)
    assert (j.n, min_distance(j)) == (23, 12)
    assert gram(j).is_zero()
    assert dso_opt(23, 4).value == 12


def test_juxtapose_distance_additivity():
    reg = registry()
    for t in (8, 10, 14):
        entry = reg.get(t, 4, True)
        for s in (1, 2):
            j = juxtapose_simplex(entry.matrix, s)
            assert min_distance(j) == 8 * s + entry.declared_d


def test_build_examples():
    m, v = build_optimal(22, 3, False)
    assert v.value == 12 == d_opt(22, 3).value and v.status == "exact"
    m, v = build_optimal(23, 4, True)
    assert v.value == 12 and v.status == "exact"
    assert gram(m).is_zero()
    m, v = build_optimal(46, 5, True)
    assert v.value == 22 == dso_opt(46, 5).value and v.status == "exact"


def test_build_missing_seed():
    with pytest.raises(MissingSeedError) as err:
        build_optimal(34, 5, True)
    assert (err.value.t, err.value.k, err.value.so) == (34, 5, True)


def test_so_flag_propagates():
    reg = registry()
    for t in reg.lengths(4, True):
        entry = reg.get(t, 4, True)
        assert gram(juxtapose_simplex(entry.matrix, 1)).is_zero()
