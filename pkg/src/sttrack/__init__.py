"""Topological tracking of connected components in binary image sequences."""
from .algorithm import TrackState, consolidate, run_algorithm1
from .barcode import Bar, Barcode
from .cubical import (CubicalComplex, build_background_complex, build_foreground_complex,
                      build_pixel_graph, faces)
from .estimator import SpatiotemporalBarcode, SpatiotemporalTracker, check_sequence
from .imageio import BinaryImage, ImageSequence, SequenceFormatError, complement, load_sequence
from .lineage import TrackingTree, build_tracking_tree, track
from .oracles import classical_0barcode, oldest_connected_oracle
from .paths import EdgeChain, is_homological_0path, is_spatiotemporal_path
from .pipeline import analyze, sequence_filtration
from .stacking import SpatiotemporalFiltration, build_filtration, cell_frames, classify, stack

__version__ = "0.1.0"
