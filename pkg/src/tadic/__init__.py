"""Ergodic 1-Lipschitz dynamics over F2[[T]] and Z2, truncated to finite precision.

Bit-packed power series arithmetic, Van der Put and Carlitz basis
expansions with verified measure-preservation and single-cycle criteria,
a constructive generator of transitive maps, keystream orbits, and the
2-adic reference theory for comparison.
"""

from .carlitz import (
    CarlitzCoefficients,
    CarlitzConstants,
    CarlitzContext,
    carlitz_table,
    check_ergodic_carlitz,
    check_lipschitz_carlitz,
    from_carlitz,
    to_carlitz,
)
from .cyclegen import CycleData, gen_cycle, random_data
from .dynamics import (
    FunctionTable,
    LevelVerdicts,
    is_bijective_mod,
    is_compatible,
    is_transitive_mod,
    orbit,
    parity_lift,
)
from .gf2ps import Residue, clmul, clmul_trunc, degree, exact_div, invert_unit, order, pdivmod, trunc
from .vanderput import (
    VdpCoefficients,
    check_ergodic_vdp,
    check_lipschitz_vdp,
    check_mp_vdp,
    from_vdp,
    to_vdp,
    vdp_table,
)
from .z2compare import (
    MahlerCoefficients,
    Z2FunctionTable,
    Z2Residue,
    Z2VdpCoefficients,
    check_ergodic_mahler_z2,
    check_ergodic_z2,
    check_mp_z2,
    from_vdp_z2,
    is_transitive_mod_z2,
    mahler_eval,
    to_vdp_z2,
)

__version__ = "0.1.0"

__all__ = [
    "CarlitzCoefficients",
    "CarlitzConstants",
    "CarlitzContext",
    "CycleData",
    "FunctionTable",
    "LevelVerdicts",
    "MahlerCoefficients",
    "Residue",
    "VdpCoefficients",
    "Z2FunctionTable",
    "Z2Residue",
    "Z2VdpCoefficients",
    "carlitz_table",
    "check_ergodic_carlitz",
    "check_ergodic_mahler_z2",
    "check_ergodic_vdp",
    "check_ergodic_z2",
    "check_lipschitz_carlitz",
    "check_lipschitz_vdp",
    "check_mp_vdp",
    "check_mp_z2",
    "clmul",
    "clmul_trunc",
    "degree",
    "exact_div",
    "from_carlitz",
    "from_vdp",
    "from_vdp_z2",
    "gen_cycle",
    "invert_unit",
    "is_bijective_mod",
    "is_compatible",
    "is_transitive_mod",
    "is_transitive_mod_z2",
    "mahler_eval",
    "orbit",
    "order",
    "parity_lift",
    "pdivmod",
    "random_data",
    "to_carlitz",
    "to_vdp",
    "to_vdp_z2",
    "trunc",
    "vdp_table",
]
