"""Deterministic 64-bit pseudo-random generator used by every random family.

The generator is splitmix64 (Steele, Lea, Flood 2014): the state advances by
the 64-bit golden-ratio constant and each output is the splitmix finalizer of
the new state.  It is specified here bit-for-bit so that any reimplementation
(in any language) can reproduce the exact same graphs from the same seeds:

    state   <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z       <- state
    z       <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9   mod 2^64
    z       <- (z xor (z >> 27)) * 0x94D049BB133111EB   mod 2^64
    output  <- z xor (z >> 31)

Derived quantities:

* ``uniform``  -- (output >> 11) / 2^53, in [0, 1).
* ``randbelow(b)`` -- rejection sampling on the top ``bit_length(b)`` bits.
* ``shuffle`` -- Fisher-Yates, descending, using ``randbelow``.
* ``derive_seed(seed, *salts)`` -- per-salt ``mix64(x xor ((salt+1) * GOLDEN))``;
  used to give repetitions and retries independent, order-insensitive streams.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(x: int) -> int:
    """The splitmix64 output finalizer (a 64-bit bijection)."""
    x &= _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


def derive_seed(seed: int, *salts: int) -> int:
    """Fold integer salts into ``seed``, one mix per salt.

    Repetition r of a benchmark uses ``derive_seed(seed, r)`` so results do
    not depend on the order repetitions execute in.
    """
    x = seed & _MASK
    for s in salts:
        x = mix64(x ^ (((s + 1) * _GOLDEN) & _MASK))
    return x


class SplitMix64:
    """Sequential splitmix64 stream."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return mix64(self._state)

    def uniform(self) -> float:
        """Double in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / 9007199254740992.0)

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound) via bit-masked rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        bits = (bound - 1).bit_length()
        if bits == 0:
            return 0
        shift = 64 - bits
        while True:
            r = self.next_u64() >> shift
            if r < bound:
                return r

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]

    def permutation(self, n: int) -> list[int]:
        perm = list(range(n))
        self.shuffle(perm)
        return perm
