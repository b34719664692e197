"""SplitMix64: the package's seedable random number generator.

All random constructions use this generator rather than ``random.Random``
so that a (family, parameters, seed) triple identifies one graph bit for
bit, independent of the Python version or host platform.  SplitMix64 is
the standard 64-bit mixer of Steele, Lea and Flood; a stream is a counter
advanced by the golden-ratio increment and scrambled by two xor-shift
multiplications.
"""

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """Deterministic 64-bit generator with a tiny, portable state."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive.

        Uses plain modulo reduction; the bias is below 2**-50 for the
        desk-scale ranges used here and keeping the reduction trivial is
        what makes the stream easy to reproduce in another language.
        """
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.next_u64() % (hi - lo + 1)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def derive_seed(base: int, index: int) -> int:
    """Per-trial seed for trial ``index`` of a run seeded with ``base``."""
    return SplitMix64((base & _MASK) ^ ((index + 1) * _GOLDEN & _MASK)).next_u64()
