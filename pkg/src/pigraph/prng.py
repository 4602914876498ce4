"""Seeded, fully specified PRNG for reproducible instance generation.

The generator is xorshift64* with a splitmix64-scrambled seed, so any
reimplementation (in any language) can reproduce instances byte for
byte from the same integer seed:

    state = splitmix64(seed)          # see _scramble below; 0 is remapped
    step:  x ^= x >> 12
           x ^= (x << 25) mod 2**64
           x ^= x >> 27
           output = (x * 0x2545F4914F6CDD1D) mod 2**64

``randrange`` draws by rejection (values >= 2**64 - 2**64 % k are
redrawn) and ``shuffle`` is a descending Fisher-Yates, both exactly as
coded here.
"""
from __future__ import annotations

_MASK = (1 << 64) - 1


def _scramble(seed: int) -> int:
    z = (seed + 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    z ^= z >> 31
    return z or 0x9E3779B97F4A7C15  # xorshift state must be nonzero


class XorShift64Star:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = _scramble(seed & _MASK)

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK

    def randrange(self, k: int) -> int:
        """Uniform draw from 0..k-1, unbiased via rejection."""
        if k <= 0:
            raise ValueError("randrange bound must be positive")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]
