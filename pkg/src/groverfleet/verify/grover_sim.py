"""Dense state-vector amplitude amplification for small registers."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from groverfleet.errors import CapacityError, InvalidInputError

MAX_SIM_BITS = 14


@dataclass(frozen=True)
class MarkedSet:
    register_bits: int
    indices: frozenset[int]

    def __post_init__(self) -> None:
        if not 1 <= self.register_bits <= MAX_SIM_BITS:
            raise CapacityError(f"dense simulation supports 1..{MAX_SIM_BITS} qubits, got {self.register_bits}")
        idx = frozenset(int(i) for i in self.indices)
        if not idx:
            raise InvalidInputError("marked set must be nonempty")
        size = 1 << self.register_bits
        if min(idx) < 0 or max(idx) >= size:
            raise InvalidInputError(f"marked indices must lie in [0, {size})")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def first(cls, register_bits: int, count: int) -> MarkedSet:
        """The ``count`` lowest indices (success depends only on the count)."""
        return cls(register_bits, frozenset(range(count)))

    @property
    def size(self) -> int:
        return 1 << self.register_bits

    @property
    def count(self) -> int:
        return len(self.indices)

    def mask(self) -> np.ndarray:
        m = np.zeros(self.size, dtype=bool)
        m[list(self.indices)] = True
        return m


def grover_trace(marked: MarkedSet, iterations: int) -> tuple[np.ndarray, np.ndarray]:
    """Marked-state probability and total norm after each of 0..r rounds."""
    if iterations < 0:
        raise InvalidInputError("iterations must be >= 0")
    mask = marked.mask()
    psi = np.full(marked.size, 1.0 / math.sqrt(marked.size))
    success = np.empty(iterations + 1)
    norms = np.empty(iterations + 1)
    for k in range(iterations + 1):
        if k:
            psi[mask] = -psi[mask]
            psi = 2.0 * psi.mean() - psi
        p = psi * psi
        success[k] = p[mask].sum()
        norms[k] = p.sum()
    return success, norms


def grover_simulate(marked: MarkedSet, iterations: int) -> float:
    """Probability of measuring a marked index after ``iterations`` rounds."""
    return float(grover_trace(marked, iterations)[0][-1])


def closed_form_success(register_bits: int, count: int, iterations: int) -> float:
    theta = math.asin(math.sqrt(count / 2**register_bits))
    return math.sin((2 * iterations + 1) * theta) ** 2
