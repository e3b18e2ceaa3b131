"""Deterministic seed derivation for repeatable experiments.

Every randomized operation in the package takes a plain integer seed.
Experiment drivers derive per-work-item seeds from a master seed with
``derive_seed(master, *path)``, where ``path`` is a tuple of counters
(e.g. dataset index, repetition index).  The derivation is a
counter-based split via ``numpy.random.SeedSequence``, so work items
get independent streams while the whole run stays a pure function of
the master seed.
"""

import numpy as np


def derive_seed(master, *path):
    """Derive a 64-bit sub-seed from a master seed and counter path.

    Args:
        master: master seed (non-negative integer).
        *path: integer counters identifying the work item.

    Returns:
        int in [0, 2**64).
    """
    ss = np.random.SeedSequence((int(master),) + tuple(int(p) for p in path))
    return int(ss.generate_state(1, np.uint64)[0])


def make_rng(seed):
    """Construct the package-standard generator for a given seed."""
    return np.random.default_rng(int(seed))
