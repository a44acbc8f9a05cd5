# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2026 The sidelobe-sensing authors
"""Side-lobe interference sensing of moving mmWave blockers."""

from ._core import (
    AntennaPattern,
    ChannelParams,
    Config,
    ConfigError,
    __version__,
    antenna_gain,
    blockage_db,
    blockage_sigma_for_radius,
    build_deployment,
    circular_error_deg,
    derive_seed,
    detection_threshold,
    extract_signature,
    interferer_presence_prob,
    pathloss_db,
    reference_gain,
    run_demo,
    run_grid_eval,
    sector_of,
    split_bands,
    suggest_bands,
    svd,
    sweep,
    weight,
    wmae,
)

__all__ = [
    "AntennaPattern",
    "ChannelParams",
    "Config",
    "ConfigError",
    "__version__",
    "antenna_gain",
    "blockage_db",
    "blockage_sigma_for_radius",
    "build_deployment",
    "circular_error_deg",
    "derive_seed",
    "detection_threshold",
    "extract_signature",
    "interferer_presence_prob",
    "pathloss_db",
    "reference_gain",
    "run_demo",
    "run_grid_eval",
    "sector_of",
    "split_bands",
    "suggest_bands",
    "svd",
    "sweep",
    "weight",
    "wmae",
]
