import pytest
from hypothesis import given, settings, strategies as st

import helpers
from conftest import load_fixture, random_corpus
from sttrack.algorithm import TrackState, consolidate, run_algorithm1
from sttrack.imageio import BinaryImage, ImageSequence
from sttrack.paths import EdgeChain
from sttrack.pipeline import MODES, analyze, sequence_filtration


def seq(*frames):
    return ImageSequence([BinaryImage.from_rows(f) for f in frames])


def test_one_pixel_over_two_frames():
    state = run_algorithm1(sequence_filtration(seq(["1"], ["1"]), "pixel-graph"))
    assert state.TE == [3]
    assert state.H == {1}
    assert state.f[2] == 1
    assert state.phi[2] == EdgeChain({3})
    assert state.raw_bars == [(1, 1), (2, 2), (2, 3), (1, 3)]
    assert consolidate(state).pairs() == [(1, 3), (2, 3)]


def test_isolated_vertex():
    state = run_algorithm1(sequence_filtration(seq(["1"]), "pixel-graph"))
    assert state.H == {1}
    assert state.TE == []
    assert consolidate(state).pairs() == [(1, 1)]


def test_consolidate_single_raw_bar():
    assert consolidate(TrackState(raw_bars=[(1, 1)])).pairs() == [(1, 1)]


def test_consolidate_keeps_latest_death():
    state = TrackState(raw_bars=[(1, 1), (2, 2), (2, 3), (1, 3)])
    assert consolidate(state).pairs() == [(1, 3), (2, 3)]


def test_merge_split_component_reborn_in_frame_two():
    result = analyze(load_fixture("merge_split"), "pixel-graph")
    assert (3, 19) in result.barcode
    classical = result.classical()
    assert classical[1].death == 19
    assert [b.birth for b in classical.long_bars(result.filtration)] == [1]


def test_sliding_component_survives():
    result = analyze(load_fixture("sliding"), "pixel-graph")
    assert (1, result.filtration.m) in result.barcode


def test_empty_foreground():
    result = analyze(seq(["000"], ["000"]), "pixel-graph")
    assert len(result.barcode) == 0


@pytest.fixture(scope="module", params=MODES)
def analyses(request):
    return [analyze(s, request.param, remediate=False) for s in random_corpus(100)]


def test_f_is_an_older_vertex(analyses):
    assert not [a for a in analyses if helpers.check_f_is_older_vertex(a)]


def test_phi_is_a_spatiotemporal_path(analyses):
    assert not [a for a in analyses if helpers.check_phi_paths(a)]


def test_matches_time_monotone_oracle(analyses):
    assert not [a for a in analyses if helpers.check_oracle_agreement(a)]


def test_barcode_sanity(analyses):
    assert not [a for a in analyses if helpers.check_barcode_sanity(a)]


def test_state_invariants(analyses):
    assert not [a for a in analyses if helpers.check_state_invariants(a)]


def test_no_remediation_needed(analyses):
    # the sweep alone already leaves every f-value in H on this corpus
    assert all(not a.state.remediations for a in analyses)


@pytest.mark.parametrize("mode", MODES)
def test_single_frame(mode):
    for s in random_corpus(100, max_frames=1):
        assert not helpers.check_single_frame_classical(analyze(s, mode))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 31), st.sampled_from(MODES))
def test_oracle_agreement_hypothesis(seed, mode):
    a = analyze(random_corpus(1, seed=seed, max_frames=5, max_side=5)[0], mode)
    assert not helpers.check_oracle_agreement(a)
    assert not helpers.check_phi_paths(a)
