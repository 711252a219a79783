"""Finite-model dynamics: function tables on F2[[T]]/T^k and their oracles.

A transformation is stored as an explicit table of 2^k residues.  The
checks here are exhaustive brute-force references: per-level
compatibility, bijectivity, single-cycle transitivity, the parity
criterion that decides whether a single cycle lifts one level, and
plain orbit iteration.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gf2ps import Residue, parse_hex, to_hex

__all__ = [
    "FunctionTable",
    "LevelVerdicts",
    "is_bijective_mod",
    "is_compatible",
    "is_transitive_mod",
    "orbit",
    "parity_lift",
    "single_cycle_levels",
]


@dataclass(frozen=True)
class LevelVerdicts:
    """Per-modulus verdicts: entry m-1 is the verdict at modulus T^m.

    Entries are True, False, or None when the property cannot be decided
    at the working precision.  The overall verdict is the three-valued
    conjunction: False dominates, then None, else True.
    """

    levels: tuple

    def level(self, m):
        return self.levels[m - 1]

    @property
    def precision(self):
        return len(self.levels)

    @property
    def overall(self):
        if any(v is False for v in self.levels):
            return False
        if any(v is None for v in self.levels):
            return None
        return True

    def all_determined_true(self):
        """True when no level is False and at least one level is decided."""
        det = [v for v in self.levels if v is not None]
        return bool(det) and all(det)

    def json_dict(self):
        return {str(m): v for m, v in enumerate(self.levels, start=1)}


@dataclass(frozen=True)
class FunctionTable:
    """Transformation of F2[[T]]/T^k as a table: entry m is f(residue m)."""

    precision: int
    table: tuple = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        k = self.precision
        if k < 1:
            raise ValueError("precision must be a positive integer")
        if len(self.table) != 1 << k:
            raise ValueError("table must have exactly 2^%d entries" % k)
        if any(not 0 <= v < (1 << k) for v in self.table):
            raise ValueError("table entry out of range for precision %d" % k)

    def __call__(self, x):
        return self.table[x]

    def json_dict(self):
        return {
            "ring": "F2T",
            "precision": self.precision,
            "table": [to_hex(v) for v in self.table],
        }

    @classmethod
    def from_json_dict(cls, obj):
        if obj.get("ring") != "F2T":
            raise ValueError("expected ring F2T, got %r" % obj.get("ring"))
        return cls(int(obj["precision"]), tuple(parse_hex(v) for v in obj["table"]))


def is_compatible(t):
    """Level m true iff x == y mod T^m always forces f(x) == f(y) mod T^m."""
    values = t.table
    out = []
    for m in range(1, t.precision + 1):
        mask = (1 << m) - 1
        out.append(all(not (v ^ values[x & mask]) & mask for x, v in enumerate(values)))
    return LevelVerdicts(tuple(out))


def is_bijective_mod(t):
    """Level m true iff x -> f(x) mod T^m permutes the 2^m residues."""
    values = t.table
    out = []
    for m in range(1, t.precision + 1):
        size = 1 << m
        mask = size - 1
        out.append(len({v & mask for v in values[:size]}) == size)
    return LevelVerdicts(tuple(out))


def single_cycle_levels(values, precision):
    """Per-level single-cycle walk shared by both rings.

    Reduction mod 2^m and mod T^m are the same bit mask on canonical
    values, so one audited walk serves the series and the 2-adic side.
    """
    out = []
    for m in range(1, precision + 1):
        need = 1 << m
        mask = need - 1
        x = values[0] & mask
        steps = 1
        # first return to 0 must happen at exactly 2^m steps
        while x and steps < need:
            x = values[x] & mask
            steps += 1
        out.append(x == 0 and steps == need)
    return LevelVerdicts(tuple(out))


def is_transitive_mod(t):
    """Level m true iff iterating from 0 mod T^m visits all 2^m residues."""
    return single_cycle_levels(t.table, t.precision)


def parity_lift(t, n):
    """Parity test deciding whether a single cycle mod T^n lifts to T^{n+1}.

    Requires a table that is compatible and measure preserving at the
    levels involved; the transitivity hypothesis is validated here, the
    others are trusted.  Returns True iff the number of points of degree
    below n (zero included) whose image has T^n coefficient 1 is odd,
    which holds iff f is transitive mod T^{n+1}.
    """
    if n < 1:
        raise ValueError("precondition: n must be at least 1")
    if t.precision < n + 1:
        raise ValueError("precondition: need precision at least n+1")
    if not single_cycle_levels(t.table, n).level(n):
        raise ValueError("precondition: not transitive mod T^%d" % n)
    values = t.table
    count = sum((values[x] >> n) & 1 for x in range(1 << n))
    return bool(count & 1)


def orbit(t, x0, steps):
    """The first `steps` points of the trajectory of x0 under the table."""
    as_residue = isinstance(x0, Residue)
    x = x0.value if as_residue else x0
    if as_residue and x0.precision != t.precision:
        raise ValueError("precision mismatch")
    if not 0 <= x < (1 << t.precision):
        raise ValueError("starting point out of range")
    values = t.table
    seq = []
    for _ in range(steps):
        seq.append(x)
        x = values[x]
    if as_residue:
        return [Residue(v, t.precision) for v in seq]
    return seq
