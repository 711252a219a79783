"""Exact polynomial and truncated power series arithmetic over F2.

Values are Python ints used as bit vectors: bit i holds the coefficient
of T^i.  An exact element of F2[T] is any such int; a Residue pairs a
value reduced mod T^k with its precision k.  The encoding makes the
digit-for-digit correspondence with 2-adic integers the identity on bit
patterns, and it is the encoding used by every file format and hex flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Poly",
    "Residue",
    "add",
    "clmul",
    "clmul_trunc",
    "degree",
    "exact_div",
    "invert_unit",
    "mul",
    "ord_abs",
    "order",
    "parse_hex",
    "pdivmod",
    "to_hex",
    "trunc",
]

# An exact polynomial in F2[T]; purely documentary alias.
Poly = int


def degree(a):
    """Degree in T of an exact polynomial; -inf for the zero polynomial."""
    return a.bit_length() - 1 if a else -math.inf


def order(a):
    """Index of the lowest set bit (the T-adic valuation); inf for 0."""
    return (a & -a).bit_length() - 1 if a else math.inf


def trunc(a, k):
    """Reduce a bit vector mod T^k."""
    return a & ((1 << k) - 1)


def clmul(a, b):
    """Carry-less (XOR accumulate) product of two bit vectors."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    acc = 0
    while a:
        acc ^= b << ((a & -a).bit_length() - 1)
        a &= a - 1
    return acc


def clmul_trunc(a, b, k):
    """Carry-less product reduced mod T^k; depends only on inputs mod T^k."""
    m = (1 << k) - 1
    return clmul(a & m, b & m) & m


def pdivmod(a, b):
    """Quotient and remainder of polynomial long division in F2[T]."""
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q = 0
    width = b.bit_length()
    while a.bit_length() >= width:
        sh = a.bit_length() - width
        q |= 1 << sh
        a ^= b << sh
    return q, a


def exact_div(a, b):
    """Exact division in F2[T]; raises when b does not divide a."""
    q, r = pdivmod(a, b)
    if r:
        raise ValueError("inexact division")
    return q


def _inv_unit(a, k):
    # Newton iteration in characteristic 2: the error term squares each step.
    x = 1
    prec = 1
    while prec < k:
        prec = min(2 * prec, k)
        m = (1 << prec) - 1
        e = (clmul(a & m, x) & m) ^ 1
        x ^= clmul(x, e) & m
    return x


@dataclass(frozen=True, slots=True)
class Residue:
    """Element of F2[[T]]/T^k: a value below 2^k plus its precision k."""

    value: int
    precision: int

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("precision must be a positive integer")
        if not 0 <= self.value < (1 << self.precision):
            raise ValueError("value out of range for precision %d" % self.precision)

    @property
    def hex(self):
        return to_hex(self.value)

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return mul(self, other)


def _bits_of(x):
    return x.value if isinstance(x, Residue) else x


def add(a, b):
    """Sum in characteristic 2 (bitwise XOR); kinds and precisions must match."""
    if isinstance(a, Residue) or isinstance(b, Residue):
        if not (isinstance(a, Residue) and isinstance(b, Residue)):
            raise TypeError("cannot mix Residue and exact polynomial operands")
        if a.precision != b.precision:
            raise ValueError("precision mismatch")
        return Residue(a.value ^ b.value, a.precision)
    return a ^ b


def mul(a, b, prec=None):
    """Carry-less product truncated to k bits, returned as a Residue."""
    if isinstance(a, Residue) and isinstance(b, Residue):
        if a.precision != b.precision:
            raise ValueError("precision mismatch")
        if prec is not None and prec != a.precision:
            raise ValueError("precision mismatch")
        prec = a.precision
    elif isinstance(a, Residue) or isinstance(b, Residue):
        k = (a if isinstance(a, Residue) else b).precision
        if prec is not None and prec != k:
            raise ValueError("precision mismatch")
        prec = k
    elif prec is None:
        raise ValueError("precision required for exact operands")
    return Residue(clmul_trunc(_bits_of(a), _bits_of(b), prec), prec)


def ord_abs(a):
    """T-adic valuation and absolute value, with |T| = 1/2; (inf, 0) for zero."""
    o = order(_bits_of(a))
    if o is math.inf:
        return math.inf, Fraction(0)
    return o, Fraction(1, 1 << o)


def invert_unit(a, prec=None):
    """Inverse of a unit mod T^k; input must have constant coefficient 1."""
    if isinstance(a, Residue):
        if prec is not None and prec != a.precision:
            raise ValueError("precision mismatch")
        if not a.value & 1:
            raise ValueError("not a unit")
        return Residue(_inv_unit(a.value, a.precision), a.precision)
    if prec is None:
        raise ValueError("precision required for exact operands")
    if not a & 1:
        raise ValueError("not a unit")
    return _inv_unit(trunc(a, prec), prec)


def to_hex(v):
    """Hex encoding of the canonical integer of a bit vector (lowercase, 0x prefixed)."""
    return hex(v)


def parse_hex(s):
    """Parse a hex string (case-insensitive, 0x prefix optional) to a bit vector."""
    v = int(s, 16)
    if v < 0:
        raise ValueError("negative hex value: %r" % s)
    return v
