"""Seeded randomness with named, splittable streams.

The generator is xoshiro256** (Blackman & Vigna), a 64-bit xorshift-family
generator with a 256-bit state. Streams are derived from a (seed, label)
pair: the label is hashed with FNV-1a, xor-folded into the seed, and the
result is expanded into the four state words with splitmix64. Two streams
with different labels are therefore independent but fully reproducible
from the run seed alone. Nothing in this package touches global RNG state.
"""

from __future__ import annotations

import math

_MASK64 = (1 << 64) - 1


def _splitmix64(state: int) -> tuple[int, int]:
    """Advance a splitmix64 state, returning (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def _fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for byte in data:
        h = ((h ^ byte) * 0x100000001B3) & _MASK64
    return h


def derive_seed(seed: int, *labels) -> int:
    """Mix a base seed with labels (strings or ints) into a new 64-bit seed.

    Pure function: the same inputs always give the same output, so derived
    seeds can be recomputed instead of checkpointed.
    """
    state = seed & _MASK64
    for label in labels:
        if isinstance(label, int):
            state ^= _fnv1a64(label.to_bytes(8, "little", signed=False) if label >= 0
                              else (label & _MASK64).to_bytes(8, "little"))
        else:
            state ^= _fnv1a64(str(label).encode("utf-8"))
        state, _ = _splitmix64(state)
    return state


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


class Rng:
    """One xoshiro256** stream.

    State is four 64-bit words, exposed via getstate/setstate so training
    can be checkpointed and resumed bitwise.
    """

    __slots__ = ("_s0", "_s1", "_s2", "_s3")

    def __init__(self, seed: int, label: str = "root"):
        sm = derive_seed(seed, label)
        sm, s0 = _splitmix64(sm)
        sm, s1 = _splitmix64(sm)
        sm, s2 = _splitmix64(sm)
        _, s3 = _splitmix64(sm)
        if s0 == s1 == s2 == s3 == 0:  # forbidden all-zero state
            s0 = 1
        self._s0, self._s1, self._s2, self._s3 = s0, s1, s2, s3

    def getstate(self) -> tuple[int, int, int, int]:
        return (self._s0, self._s1, self._s2, self._s3)

    def setstate(self, state) -> None:
        s0, s1, s2, s3 = (int(w) & _MASK64 for w in state)
        if s0 == s1 == s2 == s3 == 0:
            raise ValueError("all-zero xoshiro256** state is invalid")
        self._s0, self._s1, self._s2, self._s3 = s0, s1, s2, s3

    def next_uint64(self) -> int:
        s0, s1, s2, s3 = self._s0, self._s1, self._s2, self._s3
        result = (_rotl((s1 * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s0, self._s1, self._s2, self._s3 = s0, s1, s2, s3
        return result

    def random(self) -> float:
        """Uniform double in [0, 1) with 53 bits of precision."""
        return (self.next_uint64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, low: float, high: float, size: int | None = None):
        """Uniform draw(s) in [low, high); vector result is a float64 array."""
        if size is None:
            return low + (high - low) * self.random()
        import numpy as np

        out = np.empty(size, dtype=np.float64)
        for i in range(size):
            out[i] = low + (high - low) * self.random()
        return out

    def normal(self, size: int | None = None):
        """Standard normal draw(s) via Box-Muller.

        A scalar call consumes two uniforms and returns one value; a vector
        call consumes 2*ceil(size/2) uniforms. Consumption depends only on
        the requested size, keeping replay of a call sequence exact.
        """
        if size is None:
            u1 = 1.0 - self.random()  # (0, 1], keeps log() finite
            u2 = self.random()
            return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)
        import numpy as np

        out = np.empty(size, dtype=np.float64)
        for i in range(0, size, 2):
            u1 = 1.0 - self.random()
            u2 = self.random()
            r = math.sqrt(-2.0 * math.log(u1))
            out[i] = r * math.cos(2.0 * math.pi * u2)
            if i + 1 < size:
                out[i + 1] = r * math.sin(2.0 * math.pi * u2)
        return out

    def integers(self, n: int, size: int | None = None):
        """Uniform integer(s) in [0, n), bias-free via rejection sampling."""
        if n <= 0:
            raise ValueError("n must be positive")
        threshold = (_MASK64 + 1) - ((_MASK64 + 1) % n)
        if size is None:
            while True:
                x = self.next_uint64()
                if x < threshold:
                    return x % n
        import numpy as np

        out = np.empty(size, dtype=np.int64)
        for i in range(size):
            while True:
                x = self.next_uint64()
                if x < threshold:
                    out[i] = x % n
                    break
        return out

    def shuffle_indices(self, n: int):
        """A random permutation of range(n) (Fisher-Yates)."""
        import numpy as np

        idx = np.arange(n, dtype=np.int64)
        for i in range(n - 1, 0, -1):
            j = int(self.integers(i + 1))
            idx[i], idx[j] = idx[j], idx[i]
        return idx
