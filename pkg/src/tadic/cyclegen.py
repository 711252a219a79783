"""Constructive generator of single-cycle tables over F2[[T]].

Free bits a(k,j) steer a doubling recurrence: start from the swap 0,1 and
at each level k add a(k,j)*T^k to x_j, then append the lifted half
x_{j+2^k} = x_j + T^k.  The resulting sequence enumerates all residues
mod T^{n+1} and its successor map is transitive at every level.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .dynamics import FunctionTable

__all__ = ["CycleData", "gen_cycle", "random_data"]


@dataclass(frozen=True)
class CycleData:
    """Steering bits a(k,j) for 1 <= k <= n, 0 <= j < 2^k."""

    n: int
    bits: tuple = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(tuple(level) for level in self.bits))
        if self.n < 0:
            raise ValueError("depth must be non-negative")
        if len(self.bits) != self.n:
            raise ValueError("need one bit level per depth 1..%d" % self.n)
        for k, level in enumerate(self.bits, start=1):
            if len(level) != 1 << k:
                raise ValueError("level %d needs exactly 2^%d bits" % (k, k))
            if any(b not in (0, 1) for b in level):
                raise ValueError("steering bits must be 0 or 1")

    def a(self, k, j):
        return self.bits[k - 1][j]

    def json_dict(self):
        return {
            "n": self.n,
            "levels": {str(k): "".join(map(str, level)) for k, level in enumerate(self.bits, start=1)},
        }

    @classmethod
    def from_json_dict(cls, obj):
        n = int(obj["n"])
        levels = obj.get("levels", {})
        bits = tuple(tuple(int(ch) for ch in levels[str(k)]) for k in range(1, n + 1))
        return cls(n, bits)


def gen_cycle(d):
    """Run the recurrence; return the sequence and its successor table."""
    xs = [0, 1]
    for k in range(1, d.n + 1):
        level = d.bits[k - 1]
        bit = 1 << k
        for j in range(bit):
            if level[j]:
                xs[j] ^= bit
        for j in range(bit):
            xs.append(xs[j] ^ bit)
    size = 1 << (d.n + 1)
    succ = [0] * size
    for j in range(size):
        succ[xs[j]] = xs[(j + 1) % size]
    return tuple(xs), FunctionTable(d.n + 1, tuple(succ))


def random_data(seed, n):
    """Deterministic steering bits from a seed."""
    if n < 0:
        raise ValueError("depth must be non-negative")
    rng = random.Random(seed)
    bits = []
    for k in range(1, n + 1):
        word = rng.getrandbits(1 << k)
        bits.append(tuple((word >> j) & 1 for j in range(1 << k)))
    return CycleData(n, tuple(bits))
