"""Reproducible probe-point sampling and per-check seed derivation."""

from __future__ import annotations

import hashlib

import numpy as np

DEFAULT_BOX_HALF_WIDTH = 0.5


def probe_points(rng, count, half_width=DEFAULT_BOX_HALF_WIDTH):
    """Uniform points in the centered coordinate cube [-w, w]^4."""
    return rng.uniform(-half_width, half_width, size=(count, 4))


def derive_seed(master_seed, label):
    """Stable per-check seed: adding a check never perturbs another's draws."""
    digest = hashlib.blake2b(
        f"{master_seed}\x00{label}".encode(), digest_size=8
    ).digest()
    return int.from_bytes(digest, "big")


def check_rng(master_seed, label):
    return np.random.default_rng(derive_seed(master_seed, label))
