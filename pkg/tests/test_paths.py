from hypothesis import given, settings, strategies as st

from helpers import validators_exhaustive
from sttrack.imageio import BinaryImage, ImageSequence
from sttrack.paths import EdgeChain, chain_closure, is_homological_0path, is_spatiotemporal_path
from sttrack.pipeline import sequence_filtration

chains = st.frozensets(st.integers(1, 30), max_size=12).map(EdgeChain)


def filt_of(*frames, mode="pixel-graph"):
    return sequence_filtration(ImageSequence([BinaryImage.from_rows(f) for f in frames]), mode)


def temporal(filt, x, frame):
    return filt.index_of[(2 * x, 0, 2 * frame + 1)]


def spatial_edge(filt, x, frame):
    return filt.index_of[(2 * x + 1, 0, 2 * frame)]


@settings(max_examples=200)
@given(chains, chains, chains)
def test_chain_algebra(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + a == EdgeChain()
    assert a + EdgeChain() == a


def test_one_temporal_edge_per_slab_is_valid():
    filt = filt_of(["11"], ["11"], ["11"])
    res = is_spatiotemporal_path({temporal(filt, 0, 1), temporal(filt, 0, 2)}, filt)
    assert res.valid
    assert res.endpoints == (filt.vertex_at(0, 0, 1), filt.vertex_at(0, 0, 3))


def test_two_edges_in_one_slab_is_invalid():
    filt = filt_of(["11"], ["11"], ["11"])
    res = is_spatiotemporal_path({temporal(filt, 0, 1), temporal(filt, 1, 1)}, filt)
    assert not res.valid
    assert "slab" in res.reason


def test_u_turn_through_one_slab_is_invalid():
    filt = filt_of(["11"], ["11"])
    chain = {temporal(filt, 0, 1), spatial_edge(filt, 0, 2), temporal(filt, 1, 1)}
    assert not is_spatiotemporal_path(chain, filt)
    assert not is_homological_0path(chain_closure(chain, filt), filt)


def test_empty_chain_is_valid():
    assert is_spatiotemporal_path(set(), filt_of(["1"])).valid


def test_non_edge_index_is_invalid():
    filt = filt_of(["11"])
    assert not is_spatiotemporal_path({1}, filt).valid


def test_loop_rejected_by_both():
    filt = filt_of(["11", "11"])
    loop = set(filt.edges)
    assert len(loop) == 4
    assert not is_spatiotemporal_path(loop, filt)
    assert not is_homological_0path(chain_closure(loop, filt), filt)


def test_two_disjoint_edges_rejected():
    filt = filt_of(["11011"])
    assert len(filt.edges) == 2
    assert not is_homological_0path(chain_closure(filt.edges, filt), filt)


def test_single_edge_is_a_homological_path():
    filt = filt_of(["11"])
    assert is_homological_0path(chain_closure({3}, filt), filt)


def test_validators_agree_exhaustively():
    checked, mismatches = validators_exhaustive()
    assert checked > 1000
    assert mismatches == []
