"""scikit-learn style wrappers around the tracking pipeline."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .imageio import ImageSequence
from .lineage import Lineage, track
from .pipeline import MODES, analyze


def check_sequence(X) -> ImageSequence:
    """Validate one image sequence given as an ``ImageSequence`` or an
    array-like of shape ``(n_frames, height, width)`` holding 0/1 values."""
    if isinstance(X, ImageSequence):
        return X
    arr = np.asarray(X)
    if arr.ndim != 3:
        raise ValueError(f"expected shape (n_frames, height, width), got {arr.shape}")
    if 0 in arr.shape:
        raise ValueError(f"empty sequence of shape {arr.shape}")
    if arr.dtype != bool:
        if not np.isin(arr, (0, 1)).all():
            raise ValueError("frames must be binary (0/1 or bool)")
        arr = arr.astype(bool)
    return ImageSequence.from_array(arr)


def check_sequences(X) -> list[ImageSequence]:
    if isinstance(X, ImageSequence) or (isinstance(X, np.ndarray) and X.ndim == 3):
        raise ValueError("expected a collection of sequences; wrap a single sequence in a list")
    return [check_sequence(x) for x in X]


def _check_mode(mode):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


class SpatiotemporalTracker(BaseEstimator):
    """Fit on one image sequence, then query component lineages.

    Parameters
    ----------
    mode : {"foreground", "background", "pixel-graph"}
        Complex built from each frame.
    remediate : bool
        Re-point vertices left dangling after a sweep (see
        :func:`sttrack.algorithm.run_algorithm1`).

    Attributes
    ----------
    filtration_, state_, barcode_, tree_
        Outputs of the pipeline for the fitted sequence.
    """

    def __init__(self, mode="foreground", remediate=True):
        self.mode = mode
        self.remediate = remediate

    def fit(self, X, y=None):
        _check_mode(self.mode)
        seq = check_sequence(X)
        self.analysis_ = analyze(seq, self.mode, self.remediate)
        self.filtration_ = self.analysis_.filtration
        self.state_ = self.analysis_.state
        self.barcode_ = self.analysis_.barcode
        self.tree_ = self.analysis_.tree
        self.n_frames_ = len(seq)
        self.frame_shape_ = (seq.height, seq.width)
        return self

    def track(self, x, y, frame) -> Lineage:
        check_is_fitted(self, "analysis_")
        v = self.analysis_.locate(x, y, frame)
        return track(v, self.state_, self.filtration_, self.tree_)

    def predict(self, X):
        """Birth frame of the component through each ``(x, y, frame)`` query.

        Queries that do not hit a vertex of the fitted complex get 0.
        """
        check_is_fitted(self, "analysis_")
        X = np.atleast_2d(np.asarray(X, dtype=float))
        if X.shape[1] != 3:
            raise ValueError("queries must have three columns: x, y, frame")
        out = np.zeros(len(X), dtype=int)
        for n, (x, y, t) in enumerate(X):
            try:
                v = self.analysis_.locate(x, y, int(t))
            except KeyError:
                continue
            out[n] = self.filtration_.frame[self.state_.f[v]]
        return out

    def classical_barcode(self):
        check_is_fitted(self, "analysis_")
        return self.analysis_.classical()


class SpatiotemporalBarcode(TransformerMixin, BaseEstimator):
    """Map a collection of image sequences to their spatiotemporal barcodes.

    ``transform`` returns one integer array per sequence with rows
    ``(birth, death, birth_frame, death_frame)``.  With ``long_span`` set,
    only bars spanning at least that many frames are kept.
    """

    def __init__(self, mode="foreground", long_span=None):
        self.mode = mode
        self.long_span = long_span

    def fit(self, X, y=None):
        _check_mode(self.mode)
        check_sequences(X)
        self.n_sequences_ = len(X)
        return self

    def transform(self, X):
        check_is_fitted(self, "n_sequences_")
        out = []
        for seq in check_sequences(X):
            result = analyze(seq, self.mode)
            filt = result.filtration
            bars = (list(result.barcode) if self.long_span is None
                    else result.barcode.long_bars(filt, self.long_span))
            rows = [(b.birth, b.death, filt.frame[b.birth], filt.frame[b.death]) for b in bars]
            out.append(np.array(rows, dtype=int).reshape(-1, 4))
        return out
