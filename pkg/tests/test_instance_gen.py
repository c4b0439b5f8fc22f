from itertools import combinations

import pytest

from hypercolor.core import parameters, write_instance
from hypercolor.instance_gen import (
    GenerationFailed,
    GenParams,
    SplitMix64,
    ensemble,
    fano,
    random_graph,
    random_hypergraph,
)


def test_splitmix_reference_outputs():
    # published reference values for SplitMix64
    assert SplitMix64(0).next() == 0xE220A8397B1DCDAF
    assert SplitMix64(1234567).next() == 6457827717110365317


def test_fano_structure():
    h = fano()
    p = parameters(h)
    assert (p.delta, p.Delta, p.k) == (3, 3, 2)
    for a, b in combinations(h.hyperedges, 2):
        assert len(set(a) & set(b)) == 1


def test_random_hypergraph_examples():
    assert random_hypergraph(GenParams(7, 0, (2, 3), None, 1)).hyperedges == ()
    h = random_hypergraph(GenParams(5, 3, (3, 3), 3, 42))
    assert write_instance(h) == b"h 5\ne 1 2 3\ne 0 2 4\ne 0 3 4\n"
    assert max(h.degrees()) <= 3


def test_generator_determinism():
    p = GenParams(12, 15, (3, 5), 6, 99)
    assert write_instance(random_hypergraph(p)) == write_instance(random_hypergraph(p))
    assert write_instance(random_graph(6, "1/2", 7)) == write_instance(random_graph(6, "1/2", 7))
    assert write_instance(random_graph(6, "1/2", 7)) == (
        b"g 6\na 0 2\na 0 3\na 0 5\na 1 3\na 1 4\na 2 5\na 3 4\na 3 5\na 4 5\n")


def test_random_graph_extremes():
    assert random_graph(5, "0", 3).edges == ()
    assert len(random_graph(5, "1", 3).edges) == 10


def test_infeasible_cap_and_bad_ranges():
    with pytest.raises(GenerationFailed):
        GenParams(4, 10, (3, 3), 2, 0)
    with pytest.raises(ValueError):
        GenParams(4, 1, (1, 3), None, 0)
    with pytest.raises(ValueError):
        GenParams(4, 1, (3, 5), None, 0)


def test_ensemble_respects_ranges():
    for _, p, h in ensemble(50, 5):
        assert 6 <= h.n <= 14 and h.m <= 20
        assert all(3 <= len(e) <= 5 for e in h.hyperedges)
        assert max(h.degrees(), default=0) <= 6
