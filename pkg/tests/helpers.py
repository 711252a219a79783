"""Shared builders and steered samplers for the test suite.

Uniform random tables almost never pass the deeper criteria, so the
bridge tests mix uniform samples with samplers steered to satisfy each
criterion by construction; both verdict directions get exercised at
every level.
"""

import itertools

from tadic.carlitz import CarlitzCoefficients, carlitz_table
from tadic.dynamics import FunctionTable
from tadic.vanderput import VdpCoefficients
from tadic.z2compare import MahlerCoefficients, Z2FunctionTable, Z2VdpCoefficients


def reference_coefficients(k):
    """The pinned ergodic set: a_0 = 1, a_1 = 1+T, a_{2^n-1} = T^n below T^k."""
    a = {0: 1, 1: 3}
    for n in range(2, k):
        a[(1 << n) - 1] = 1 << n
    return CarlitzCoefficients(k, a)


def reference_table(k, ctx=None):
    """Full table of the reference set at precision k."""
    return carlitz_table(reference_coefficients(k), ctx)


# the reference table at k=4, pinned by hand from the coefficient sum
REFERENCE_TABLE_K4 = (0x1, 0x2, 0xF, 0x8, 0xD, 0x6, 0x3, 0x4,
                      0x9, 0xA, 0x7, 0x0, 0x5, 0xE, 0xB, 0xC)


def random_table(rng, k):
    return FunctionTable(k, tuple(rng.randrange(1 << k) for _ in range(1 << k)))


def random_z2_table(rng, k):
    return Z2FunctionTable(k, tuple(rng.randrange(1 << k) for _ in range(1 << k)))


def _unit(rng, width):
    # an odd value of the given bit width
    return 1 | (rng.getrandbits(width - 1) << 1) if width > 1 else 1


def random_lipschitz_vdp(rng, k):
    """Uniform over sets with ord(B_alpha) >= deg alpha (random b_alpha)."""
    B = [rng.getrandbits(k), rng.getrandbits(k)]
    for m in range(2, 1 << k):
        d = m.bit_length() - 1
        B.append(rng.getrandbits(k - d) << d)
    return VdpCoefficients(k, tuple(B))


def random_mp_vdp(rng, k):
    """Lipschitz sets whose b_0 + b_1 and every b_alpha are units."""
    B0 = rng.getrandbits(k)
    B = [B0, B0 ^ 1 ^ (rng.getrandbits(k - 1) << 1)]
    for m in range(2, 1 << k):
        d = m.bit_length() - 1
        B.append(_unit(rng, k - d) << d)
    return VdpCoefficients(k, tuple(B))


def random_ergodic_vdp(rng, k):
    """Sets passing every single-cycle clause checkable below precision k."""
    if k < 2:
        raise ValueError("need k >= 2")
    B = [0] * (1 << k)
    B[0] = 1 | (rng.getrandbits(k - 1) << 1)
    B[1] = B[0] ^ 3 ^ ((rng.getrandbits(k - 2) << 2) if k > 2 else 0)
    for d in range(1, k):
        lo = 1 << d
        for a in range(lo, 2 * lo):
            B[a] = _unit(rng, k - d) << d
        if d <= k - 2:
            s = 0
            for a in range(lo, 2 * lo):
                s ^= B[a]
            # bit d of the band XOR is clear already (even count of units);
            # force bit d+1 so the scaled sum is T mod T^2
            if not (s >> (d + 1)) & 1:
                B[lo] ^= 1 << (d + 1)
    return VdpCoefficients(k, tuple(B))


def corrupt_vdp(rng, c):
    """Flip one coefficient bit above the divisibility floor."""
    k = c.precision
    B = list(c.B)
    m = rng.randrange(1 << k)
    d = max(m.bit_length() - 1, 0)
    B[m] ^= 1 << rng.randrange(d, k)
    return VdpCoefficients(k, tuple(B))


def all_lipschitz_vdp(k):
    """Every Lipschitz coefficient set at precision k, exhaustively."""
    shifts = [0, 0] + [m.bit_length() - 1 for m in range(2, 1 << k)]
    axes = [range(1 << (k - d)) for d in shifts]
    for combo in itertools.product(*axes):
        yield VdpCoefficients(k, tuple(v << d for v, d in zip(combo, shifts)))


def random_z2_compatible(rng, k):
    """Uniform over sets with 2^{floor(log2 m)} dividing B_m."""
    B = [rng.getrandbits(k), rng.getrandbits(k)]
    for m in range(2, 1 << k):
        w = m.bit_length() - 1
        B.append(rng.getrandbits(k - w) << w)
    return Z2VdpCoefficients(k, tuple(B))


def random_z2_ergodic(rng, k):
    """Compatible sets passing every 2-adic single-cycle clause below k."""
    if k < 2:
        raise ValueError("need k >= 2")
    mask = (1 << k) - 1
    B = [0] * (1 << k)
    B[0] = 1 | (rng.getrandbits(k - 1) << 1)
    B[1] = (3 - B[0] + ((rng.getrandbits(k - 2) << 2) if k > 2 else 0)) & mask
    for w in range(1, k):
        lo = 1 << w
        width = k - w
        bs = [_unit(rng, width) for _ in range(lo)]
        if w <= k - 2:
            want = 2 if w == 1 else 0
            # the band holds 2^w odd values, so the defect is even and
            # adding it to one scaled coefficient keeps everything odd
            delta = (want - sum(bs)) % 4
            bs[0] = (bs[0] + delta) % (1 << width)
        for j, b in enumerate(bs):
            B[lo + j] = b << w
    return Z2VdpCoefficients(k, tuple(B))


def corrupt_z2(rng, c):
    """Add one 2-power above the divisibility floor to one coefficient."""
    k = c.precision
    mask = (1 << k) - 1
    B = list(c.B)
    m = rng.randrange(1 << k)
    w = max(m.bit_length() - 1, 0)
    B[m] = (B[m] + (1 << rng.randrange(w, k))) & mask
    return Z2VdpCoefficients(k, tuple(B))


def random_mahler(rng, k, nmax):
    return MahlerCoefficients(k, {i: rng.getrandbits(k) for i in range(nmax + 1)})


def random_mahler_ergodic(rng, k, nmax):
    """Sets with odd a_0, a_1 = 1 mod 4, and the fast 2-power decay."""
    mask = (1 << k) - 1
    a = {0: rng.getrandbits(k) | 1, 1: ((rng.getrandbits(k) & ~3) | 1) & mask}
    for i in range(2, nmax + 1):
        w = min((i + 1).bit_length(), k)
        a[i] = (rng.getrandbits(k) >> w) << w
    return MahlerCoefficients(k, a)


def perturbed_reference(rng, k, extras=3):
    """Random sets keeping the reference chain a_{2^j-1} = T^j mod T^{j+1}."""
    a = {0: 1 | (rng.getrandbits(k - 1) << 1)}
    a[1] = 3 ^ ((rng.getrandbits(k - 2) << 2) if k > 2 else 0)
    for j in range(2, k):
        hi = (rng.getrandbits(k - j - 1) << (j + 1)) if j + 1 < k else 0
        a[(1 << j) - 1] = (1 << j) | hi
    for _ in range(extras):
        n = rng.randrange(2, 1 << k)
        if (n + 1) & n == 0:
            continue  # keep the chain indices as built
        bound = n.bit_length() - 1
        if bound + 1 < k:
            a[n] = rng.getrandbits(k - bound - 1) << (bound + 1)
    return CarlitzCoefficients(k, a)
