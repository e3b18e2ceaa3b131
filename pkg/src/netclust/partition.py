"""Node partitions (community assignments) with dense labels."""

import numpy as np


class Partition:
    """Assignment of every node to exactly one community.

    Labels are stored densely: community ids are 0..k-1 with no gaps.
    Instances are immutable.
    """

    __slots__ = ("_labels",)

    def __init__(self, labels):
        """
        Args:
            labels: sequence of community ids, one per node; ids must
                already be dense 0..k-1 (use ``from_labels`` for
                arbitrary ids).
        """
        arr = np.asarray(labels)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("labels must be a non-empty 1-d sequence")
        if not np.issubdtype(arr.dtype, np.integer):
            raise ValueError("community ids must be integers")
        arr = arr.astype(np.int64)
        k = arr.max() + 1
        if arr.min() < 0 or len(np.unique(arr)) != k:
            raise ValueError("community ids must be dense 0..k-1")
        arr.setflags(write=False)
        self._labels = arr

    @classmethod
    def from_labels(cls, labels):
        """Build a Partition from arbitrary hashable labels.

        Ids are re-indexed densely in first-appearance order.
        """
        mapping = {}
        dense = []
        for lab in labels:
            if lab not in mapping:
                mapping[lab] = len(mapping)
            dense.append(mapping[lab])
        return cls(dense)

    @property
    def labels(self):
        """Read-only array of per-node community ids."""
        return self._labels

    @property
    def n(self):
        return self._labels.size

    @property
    def k(self):
        """Number of communities."""
        return int(self._labels.max()) + 1

    def sizes(self):
        """Per-community node counts, indexed by community id."""
        return np.bincount(self._labels, minlength=self.k)

    def restrict(self, nodes):
        """Partition induced on a subset of nodes, re-indexed densely.

        Args:
            nodes: iterable of node indices (order defines the new node
                indexing).
        """
        return Partition.from_labels(self._labels[np.asarray(list(nodes), dtype=np.int64)])

    def same_clustering(self, other):
        """True if both partitions group nodes identically (labels may differ)."""
        if self.n != other.n:
            return False
        return np.array_equal(_canonical(self._labels), _canonical(other.labels))

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return np.array_equal(self._labels, other.labels)

    def __hash__(self):
        return hash(self._labels.tobytes())

    def __len__(self):
        return self.n

    def __repr__(self):
        return "Partition(n=%d, k=%d)" % (self.n, self.k)


def _canonical(labels):
    # Relabel by first appearance so structurally equal partitions compare equal.
    mapping = {}
    out = np.empty_like(labels)
    for i, lab in enumerate(labels):
        if lab not in mapping:
            mapping[lab] = len(mapping)
        out[i] = mapping[lab]
    return out
