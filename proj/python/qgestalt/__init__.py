"""Quantum-inspired recognition: amplitude encoding, density-operator
centroids, fidelity-based three-valued classification, and musical-theme
similarity."""

from ._core import (
    AbstractTheme,
    CentroidPair,
    DensityOperator,
    MusicalCentroids,
    MusicalDataSet,
    MusicalIdeaState,
    PureState,
    QGestaltError,
    QuantumDataSet,
    __version__,
    amplitude_encode,
    centroids,
    classical_centroid,
    classify,
    classify_batch,
    classify_theme,
    decode_features,
    encode_melodic,
    encode_rhythmic,
    encode_theme,
    fidelity,
    fidelity_pure,
    mixture,
    musical_centroids,
    musical_similar,
    negative_centroid,
    parse_theme,
    positive_centroid,
    projector,
    r_similar,
    resolve_span,
    run_selftest,
    spectral_sqrt,
    theme_from_pitches,
    total_ticks,
)

__all__ = [
    "AbstractTheme",
    "CentroidPair",
    "DensityOperator",
    "MusicalCentroids",
    "MusicalDataSet",
    "MusicalIdeaState",
    "PureState",
    "QGestaltError",
    "QuantumDataSet",
    "__version__",
    "amplitude_encode",
    "centroids",
    "classical_centroid",
    "classify",
    "classify_batch",
    "classify_theme",
    "decode_features",
    "encode_melodic",
    "encode_rhythmic",
    "encode_theme",
    "fidelity",
    "fidelity_pure",
    "mixture",
    "musical_centroids",
    "musical_similar",
    "negative_centroid",
    "parse_theme",
    "positive_centroid",
    "projector",
    "r_similar",
    "resolve_span",
    "run_selftest",
    "spectral_sqrt",
    "theme_from_pitches",
    "total_ticks",
]
