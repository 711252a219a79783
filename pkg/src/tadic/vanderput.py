"""Van der Put basis over F2[[T]]: ball indicators, expansion, criteria.

A function on F2[[T]]/T^k is written as f(x) = sum of B_alpha * chi(alpha, x)
over polynomials alpha of degree below k.  Coefficients are finite
differences of f, so expansion and evaluation are XOR accumulations.
The criteria decide 1-Lipschitz continuity, measure preservation, and
ergodicity per level from the scaled coefficients b_alpha.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dynamics import FunctionTable, LevelVerdicts
from .gf2ps import Residue, order, parse_hex, to_hex

__all__ = [
    "VdpCoefficients",
    "check_ergodic_vdp",
    "check_lipschitz_vdp",
    "check_mp_vdp",
    "chi",
    "from_vdp",
    "restrict",
    "to_vdp",
    "vdp_table",
]


@dataclass(frozen=True)
class VdpCoefficients:
    """Coefficients B_alpha indexed by the canonical integer of alpha."""

    precision: int
    B: tuple = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "B", tuple(self.B))
        k = self.precision
        if k < 1:
            raise ValueError("precision must be a positive integer")
        if len(self.B) != 1 << k:
            raise ValueError("need exactly 2^%d coefficients" % k)
        if any(not 0 <= v < (1 << k) for v in self.B):
            raise ValueError("coefficient out of range for precision %d" % k)

    def b(self, m):
        """Scaled coefficient b_alpha = B_alpha / T^{deg alpha}; errors when not divisible."""
        v = self.B[m]
        d = m.bit_length() - 1
        if d <= 0:
            return v
        if v & ((1 << d) - 1):
            raise ValueError("T^%d does not divide B_%d" % (d, m))
        return v >> d

    def json_dict(self):
        return {
            "ring": "F2T",
            "basis": "vanderput",
            "precision": self.precision,
            "coeffs": {str(m): to_hex(v) for m, v in enumerate(self.B) if v},
        }

    @classmethod
    def from_json_dict(cls, obj):
        if obj.get("ring") != "F2T" or obj.get("basis") != "vanderput":
            raise ValueError("expected ring F2T with basis vanderput")
        k = int(obj["precision"])
        B = [0] * (1 << k)
        for key, v in obj.get("coeffs", {}).items():
            B[int(key)] = parse_hex(v)
        return cls(k, tuple(B))


def chi(alpha, x, prec=None):
    """Indicator of the ball around alpha: x == alpha mod T^{deg alpha + 1}.

    For alpha = 0 the ball is x == 0 mod T.  Residue arguments must carry
    more precision than deg alpha.
    """
    d = max(alpha.bit_length() - 1, 0)
    if isinstance(x, Residue):
        if prec is not None and prec != x.precision:
            raise ValueError("precision mismatch")
        prec = x.precision
        x = x.value
    if prec is not None and prec <= d:
        raise ValueError("insufficient precision for deg alpha = %d" % d)
    return 1 if not (x ^ alpha) & ((2 << d) - 1) else 0


def to_vdp(t):
    """Read coefficients off the table: values at 0 and 1, then top-bit differences."""
    values = t.table
    B = [values[0], values[1]]
    for m in range(2, len(values)):
        B.append(values[m] ^ values[m ^ (1 << (m.bit_length() - 1))])
    return VdpCoefficients(t.precision, tuple(B))


def from_vdp(c, x):
    """Evaluate the expansion at x; nested balls leave at most k nonzero terms."""
    as_residue = isinstance(x, Residue)
    if as_residue:
        if x.precision != c.precision:
            raise ValueError("precision mismatch")
        x = x.value
    k = c.precision
    if not 0 <= x < (1 << k):
        raise ValueError("point out of range for precision %d" % k)
    B = c.B
    acc = B[x & 1]
    n = x >> 1
    shift = 1
    while n:
        if n & 1:
            acc ^= B[x & ((2 << shift) - 1)]
        n >>= 1
        shift += 1
    acc &= (1 << k) - 1
    return Residue(acc, k) if as_residue else acc


def vdp_table(c):
    """Synthesize the full table of the expansion at its own precision."""
    return FunctionTable(c.precision, tuple(from_vdp(c, x) for x in range(1 << c.precision)))


def restrict(c, prec):
    """Truncate the expansion to a lower precision."""
    if not 1 <= prec <= c.precision:
        raise ValueError("precision must be between 1 and %d" % c.precision)
    mask = (1 << prec) - 1
    return VdpCoefficients(prec, tuple(v & mask for v in c.B[: 1 << prec]))


def check_lipschitz_vdp(c):
    """True iff ord(B_alpha) >= deg alpha for every nonzero-degree index."""
    return all(order(c.B[m]) >= m.bit_length() - 1 for m in range(2, len(c.B)))


def _require_lipschitz(c):
    if not check_lipschitz_vdp(c):
        raise ValueError("coefficients are not 1-Lipschitz")


def check_mp_vdp(c):
    """Measure preservation per level.

    Level m holds iff b_0 + b_1 is a unit and b_alpha is a unit for every
    alpha of degree below m; this matches bijectivity mod T^m exactly, so
    all k levels are decided booleans.
    """
    _require_lipschitz(c)
    k = c.precision
    B = c.B
    ok = bool((B[0] ^ B[1]) & 1)
    out = [ok]
    for m in range(2, k + 1):
        d = m - 1
        # units at degree d: the T^d coefficient of B_alpha must be set
        ok = ok and all((B[a] >> d) & 1 for a in range(1 << d, 2 << d))
        out.append(ok)
    return LevelVerdicts(tuple(out))


def check_ergodic_vdp(c):
    """Single-cycle criterion per level, three-valued.

    Level 1 needs b_0 and b_0 + b_1 odd.  Each next level m adds the unit
    conditions at degree m-1 and a lift clause: the T coefficient of
    b_0 + b_1 for m = 2, and sum of b_alpha over deg alpha = m-2 equal to
    T mod T^2 for m >= 3 (the same sums the block conditions prescribe,
    each checked once).  A True verdict at level m is only reported for
    m <= k-1; level k stays undecided unless some clause fails outright.
    """
    _require_lipschitz(c)
    k = c.precision
    B = c.B
    ok = bool(B[0] & 1) and bool((B[0] ^ B[1]) & 1)
    raw = [ok]
    for m in range(2, k + 1):
        d = m - 1
        ok = ok and all((B[a] >> d) & 1 for a in range(1 << d, 2 << d))
        if m == 2:
            ok = ok and bool((B[0] ^ B[1]) & 2)
        else:
            s = 0
            for a in range(1 << (m - 2), 1 << (m - 1)):
                s ^= B[a]
            # scaled sum must equal T mod T^2: bits m-2 and m-1 of the raw sum
            ok = ok and (s >> (m - 2)) & 3 == 2
        raw.append(ok)
    levels = [v if (v is False or m <= k - 1) else None for m, v in enumerate(raw, start=1)]
    return LevelVerdicts(tuple(levels))
