"""Reproducible random substreams.

A root seed expands into numbered independent substreams. Substream
``(group, block)`` is the same generator no matter which worker consumes
it, so replicate values do not depend on scheduling.
"""

import numpy as np

# Stream groups used by experiments that draw from several ensembles
PRIMARY = 0
COMPARE = 1
CONTROL = 2
REFERENCE = 3
AUXILIARY = 4


def substream(seed: int, block: int, group: int = PRIMARY) -> np.random.Generator:
    """Generator for block ``block`` of stream group ``group`` under ``seed``."""
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(group, block))
    return np.random.default_rng(sequence)


def stream_label(seed: int, group: int, block: int, offset: int) -> str:
    """Label recorded with every replicate: seed/group/block/offset."""
    return f"{seed}/{group}/{block}/{offset}"
