"""Replicate-block planning and parallel execution.

Replicates are split into fixed-size blocks. Block b of stream group g
always draws from the same substream, so results do not depend on the
number of workers or the order in which blocks finish.
"""

from dataclasses import dataclass
from typing import Callable, List

import numpy as np
from joblib import Parallel, delayed

from ..ensembles.streams import stream_label, substream
from ..utils.logging import get_logger, log_execution_time

logger = get_logger(__name__)

# kernel(rng, count) -> array with `count` rows, one per replicate
Kernel = Callable[[np.random.Generator, int], np.ndarray]


@dataclass(frozen=True)
class Block:
    index: int
    start: int
    size: int


@dataclass
class ReplicateTable:
    """Raw replicate values in replicate order, with their stream labels."""
    values: np.ndarray
    labels: List[str]
    group: int

    @property
    def replications(self) -> int:
        return int(self.values.shape[0])

    def column(self, j: int) -> np.ndarray:
        return self.values[:, j]


def plan_blocks(replications: int, block_size: int) -> List[Block]:
    """Consecutive blocks of ``block_size`` replicates; the last may be short."""
    blocks = []
    for index, start in enumerate(range(0, replications, block_size)):
        blocks.append(Block(index=index, start=start, size=min(block_size, replications - start)))
    return blocks


def _run_block(kernel: Kernel, seed: int, group: int, block: Block):
    rng = substream(seed, block.index, group)
    values = np.asarray(kernel(rng, block.size), dtype=np.float64)
    values = values.reshape(block.size, -1)
    labels = [stream_label(seed, group, block.index, offset) for offset in range(block.size)]
    return values, labels


@log_execution_time(logger)
def run_replicates(
    kernel: Kernel,
    replications: int,
    seed: int,
    *,
    group: int,
    block_size: int,
    workers: int = 1,
) -> ReplicateTable:
    """
    Run ``kernel`` over all replicate blocks and stack the results in block order.

    Args:
        kernel: Picklable callable drawing ``count`` replicates from ``rng``
        replications: Total number of replicates
        seed: Root seed
        group: Stream group, keeping independent ensembles on disjoint substreams
        block_size: Replicates per substream
        workers: joblib worker processes (1 runs in-process)
    """
    blocks = plan_blocks(replications, block_size)
    logger.debug(f"Running {replications} replicates in {len(blocks)} blocks on {workers} worker(s)")
    if workers == 1 or len(blocks) == 1:
        results = [_run_block(kernel, seed, group, block) for block in blocks]
    else:
        results = Parallel(n_jobs=workers)(
            delayed(_run_block)(kernel, seed, group, block) for block in blocks
        )

    values = np.concatenate([v for v, _ in results], axis=0)
    labels = [label for _, block_labels in results for label in block_labels]
    return ReplicateTable(values=values, labels=labels, group=group)
