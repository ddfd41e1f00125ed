"""Monte Carlo estimate of the proof-of-work hit rate for small ``b``.

Random 80-byte headers are double-hashed and the digest, read as a
big-endian integer, is compared with ``2**(256 - b)``.  Bitcoin itself
compares the byte-reversed digest; the model here is the leading-zero count.
"""

from __future__ import annotations

import hashlib
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from groverfleet.errors import ImpracticalSamplingError, InvalidInputError

HEADER_BYTES = 80
MAX_SAMPLE_BITS = 24
MIN_SAMPLES = 10_000
DEFAULT_SEED = 20250101
_CHUNK = 1 << 16


@dataclass(frozen=True)
class HitRateEstimate:
    bits: int
    samples: int
    hits: int

    @property
    def rate(self) -> float:
        return self.hits / self.samples

    @property
    def std_error(self) -> float:
        p = self.rate
        return math.sqrt(p * (1.0 - p) / self.samples)

    @property
    def expected(self) -> float:
        return 2.0 ** -self.bits

    def sigma_deviation(self) -> float:
        """Deviation from ``2**-b`` in units of the exact binomial sigma."""
        p = self.expected
        sd = math.sqrt(p * (1.0 - p) / self.samples)
        return 0.0 if sd == 0 else abs(self.rate - p) / sd


def _count_hits(bits: int, samples: int, seed_seq: np.random.SeedSequence) -> int:
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    shift = 32 - bits
    sha = hashlib.sha256
    hits = 0
    done = 0
    while done < samples:
        n = min(_CHUNK, samples - done)
        buf = rng.bytes(HEADER_BYTES * n)
        for i in range(0, HEADER_BYTES * n, HEADER_BYTES):
            digest = sha(sha(buf[i : i + HEADER_BYTES]).digest()).digest()
            if int.from_bytes(digest[:4], "big") >> shift == 0:
                hits += 1
        done += n
    return hits


def monte_carlo_hit_rate(bits: int, samples: int, seed: int = DEFAULT_SEED, workers: int = 1) -> HitRateEstimate:
    """Fraction of random headers whose double-SHA-256 digest is below ``2**(256-b)``."""
    if not isinstance(bits, int) or bits < 0:
        raise InvalidInputError(f"bits must be a nonnegative integer, got {bits!r}")
    if bits > MAX_SAMPLE_BITS:
        raise ImpracticalSamplingError(f"b={bits} exceeds the sampling limit of {MAX_SAMPLE_BITS}")
    if samples < MIN_SAMPLES:
        raise InvalidInputError(f"need at least {MIN_SAMPLES} samples, got {samples}")
    if bits == 0:
        return HitRateEstimate(0, samples, samples)
    streams = np.random.SeedSequence(seed).spawn(max(1, workers))
    shares = [samples // len(streams) + (i < samples % len(streams)) for i in range(len(streams))]
    if len(streams) == 1:
        hits = _count_hits(bits, samples, streams[0])
    else:
        with ProcessPoolExecutor(max_workers=len(streams)) as pool:
            hits = sum(pool.map(_count_hits, [bits] * len(streams), shares, streams))
    return HitRateEstimate(bits, samples, hits)
