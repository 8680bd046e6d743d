import dataclasses
from functools import cached_property

import numpy as np

from noneq_spectra.errors.base import ArgumentError, LabelError


def standard_pair_order(labels: tuple[str, ...]) -> tuple[tuple[str, str], ...]:
    populations = [(label, label) for label in labels]
    coherences = []
    for i, k in enumerate(labels):
        for l in labels[i + 1 :]:
            coherences.extend([(k, l), (l, k)])
    return tuple(populations + coherences)


@dataclasses.dataclass(frozen=True)
class LiouvilleIndex:
    """
    Bijection between ordered label pairs (k, l) and flat Liouville-space indices.

    Populations come first in label order, followed by each coherence pair as
    (kl, lk). For three levels a, b, c this is (aa, bb, cc, ab, ba, ac, ca, bc, cb).
    """

    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))

    @cached_property
    def pairs(self) -> tuple[tuple[str, str], ...]:
        return standard_pair_order(tuple(self.labels))

    @cached_property
    def _positions(self) -> dict[tuple[str, str], int]:
        return {pair: position for position, pair in enumerate(self.pairs)}

    @property
    def size(self) -> int:
        return len(self.pairs)

    def flat(self, k: str, l: str) -> int:
        try:
            return self._positions[(k, l)]
        except KeyError:
            raise LabelError(f"Unknown Liouville pair ({k!r}, {l!r})") from None

    def pair(self, flat_index: int) -> tuple[str, str]:
        if not 0 <= flat_index < self.size:
            raise ArgumentError(
                f"Flat index {flat_index} outside 0..{self.size - 1}"
            )
        return self.pairs[flat_index]

    def vectorize(self, matrix: np.ndarray) -> np.ndarray:
        positions = {label: idx for idx, label in enumerate(self.labels)}
        vector = np.empty(self.size, dtype=complex)
        for flat_index, (k, l) in enumerate(self.pairs):
            vector[flat_index] = matrix[positions[k], positions[l]]
        return vector

    def matrix(self, vector: np.ndarray) -> np.ndarray:
        positions = {label: idx for idx, label in enumerate(self.labels)}
        n = len(self.labels)
        result = np.zeros((n, n), dtype=complex)
        for flat_index, (k, l) in enumerate(self.pairs):
            result[positions[k], positions[l]] = vector[flat_index]
        return result

    def conjugate_permutation(self) -> np.ndarray:
        # maps flat(k, l) -> flat(l, k)
        return np.array([self.flat(l, k) for k, l in self.pairs])

    def population_indices(self) -> np.ndarray:
        return np.array([self.flat(label, label) for label in self.labels])
