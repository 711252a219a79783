"""Command-line front end: verify, expand, eval, convert, gen-cycle, keystream.

Exit codes: 0 the property holds (or the product was emitted), 1 the
property fails, 2 usage or data errors.  Reports are JSON on stdout;
keystream emits plain hex lines.  All verdicts come straight from the
library calls, the front end adds no logic of its own.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import carlitz, cyclegen, dynamics, vanderput, z2compare
from .gf2ps import parse_hex, to_hex

__all__ = ["main", "run"]

_RING = {"f2t": "F2T", "z2": "Z2"}
_BASIS = {"vdp": "vanderput", "carlitz": "carlitz", "mahler": "mahler"}


class _CliError(Exception):
    """Usage or data error carrying the one-line diagnostic."""


class _OneLineParser(argparse.ArgumentParser):
    """Flag errors become a single stderr line and exit code 2."""

    def error(self, message):
        print("error: %s" % message, file=sys.stderr)
        raise SystemExit(2)


def _build_parser():
    parser = _OneLineParser(prog="tadic", description="Ergodic function toolkit over F2[[T]] and Z2.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="suppress stdout, keep only the exit code")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    v = sub.add_parser("verify", parents=[common], help="check a criterion on coefficients, or a table exhaustively")
    v.add_argument("--ring", choices=sorted(_RING))
    v.add_argument("--basis", choices=sorted(_BASIS))
    v.add_argument("--check", choices=["ergodic", "lipschitz", "mp"])
    v.add_argument("--coeffs", metavar="FILE")
    v.add_argument("--exhaustive", action="store_true", help="brute-force a table per level instead")
    v.add_argument("--table", metavar="FILE")

    e = sub.add_parser("expand", parents=[common], help="extract basis coefficients from a table")
    e.add_argument("--basis", choices=["vdp", "carlitz"], required=True)
    e.add_argument("--table", metavar="FILE", required=True)

    ev = sub.add_parser("eval", parents=[common], help="evaluate a coefficient file at one point")
    ev.add_argument("--coeffs", metavar="FILE", required=True)
    ev.add_argument("--x", metavar="HEX", required=True)
    ev.add_argument("--prec", type=int, metavar="K")

    c = sub.add_parser("convert", parents=[common], help="convert coefficients between bases via the table")
    c.add_argument("--from", dest="from_basis", choices=["vdp", "carlitz"], required=True)
    c.add_argument("--to", dest="to_basis", choices=["vdp", "carlitz"], required=True)
    c.add_argument("--coeffs", metavar="FILE", required=True)

    g = sub.add_parser("gen-cycle", parents=[common], help="generate a single-cycle table from steering bits")
    g.add_argument("--n", type=int, metavar="N")
    g.add_argument("--seed", type=int, default=0, metavar="S")
    g.add_argument("--data", metavar="FILE")

    ks = sub.add_parser("keystream", parents=[common], help="emit orbit residues as hex lines")
    ks.add_argument("--coeffs", metavar="FILE", required=True)
    ks.add_argument("--x0", metavar="HEX", required=True)
    ks.add_argument("--prec", type=int, metavar="K")
    ks.add_argument("--steps", type=int, metavar="N", required=True)
    ks.add_argument("--bit", type=int, metavar="I")
    return parser


def _read_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise _CliError("cannot read %s: %s" % (path, exc.strerror or exc))
    except json.JSONDecodeError as exc:
        raise _CliError("invalid JSON in %s: %s" % (path, exc))


def _load_table(path):
    obj = _read_json(path)
    ring = obj.get("ring")
    if ring == "F2T":
        return dynamics.FunctionTable.from_json_dict(obj)
    if ring == "Z2":
        return z2compare.Z2FunctionTable.from_json_dict(obj)
    raise _CliError("unsupported ring %r in %s" % (ring, path))


_COEFF_KINDS = {
    ("F2T", "vanderput"): vanderput.VdpCoefficients,
    ("F2T", "carlitz"): carlitz.CarlitzCoefficients,
    ("Z2", "vanderput"): z2compare.Z2VdpCoefficients,
    ("Z2", "mahler"): z2compare.MahlerCoefficients,
}


def _load_coeffs(path):
    obj = _read_json(path)
    kind = (obj.get("ring"), obj.get("basis"))
    cls = _COEFF_KINDS.get(kind)
    if cls is None:
        raise _CliError("unsupported ring/basis %r in %s" % (kind, path))
    return kind, cls.from_json_dict(obj)


def _restricted(kind, c, prec):
    if prec is None:
        return c
    if not 1 <= prec <= c.precision:
        raise _CliError("--prec must be between 1 and the file precision %d" % c.precision)
    if kind == ("F2T", "vanderput"):
        return vanderput.restrict(c, prec)
    if kind == ("F2T", "carlitz"):
        return carlitz.restrict(c, prec)
    if kind == ("Z2", "vanderput"):
        return z2compare.restrict_vdp_z2(c, prec)
    return z2compare.restrict_mahler_z2(c, prec)


def _emit(args, report):
    if not args.quiet:
        print(json.dumps(report, indent=2))


def _cmd_verify(args):
    if args.exhaustive:
        if not args.table:
            raise _CliError("--exhaustive needs --table FILE")
        t = _load_table(args.table)
        comp = dynamics.is_compatible(t)
        bij = dynamics.is_bijective_mod(t)
        trans = dynamics.is_transitive_mod(t)
        verdict = comp.overall is True and bij.overall is True and trans.overall is True
        _emit(args, {
            "command": "verify",
            "mode": "exhaustive",
            "ring": "f2t" if isinstance(t, dynamics.FunctionTable) else "z2",
            "precision": t.precision,
            "compatible": comp.json_dict(),
            "bijective": bij.json_dict(),
            "transitive": trans.json_dict(),
            "verdict": verdict,
        })
        return 0 if verdict else 1
    if not (args.ring and args.basis and args.check and args.coeffs):
        raise _CliError("verify needs --ring, --basis, --check and --coeffs (or --exhaustive --table)")
    kind, c = _load_coeffs(args.coeffs)
    want = (_RING[args.ring], _BASIS[args.basis])
    if kind != want:
        raise _CliError("coefficient file is %s/%s but flags say %s/%s" % (kind + want))
    levels = None
    undetermined = None
    combo = (args.ring, args.basis, args.check)
    if combo == ("f2t", "vdp", "lipschitz"):
        verdict = vanderput.check_lipschitz_vdp(c)
    elif combo == ("f2t", "vdp", "mp"):
        levels = vanderput.check_mp_vdp(c)
        verdict = levels.overall is True
    elif combo == ("f2t", "vdp", "ergodic"):
        levels = vanderput.check_ergodic_vdp(c)
        verdict = levels.overall is not False
    elif combo == ("f2t", "carlitz", "lipschitz"):
        verdict = carlitz.check_lipschitz_carlitz(c)
        undetermined = list(carlitz.undetermined_lipschitz_indices(c))
    elif combo == ("f2t", "carlitz", "ergodic"):
        levels = carlitz.check_ergodic_carlitz(c)
        verdict = levels.overall is not False
    elif combo == ("z2", "vdp", "mp"):
        verdict = z2compare.check_mp_z2(c)
    elif combo == ("z2", "vdp", "ergodic"):
        levels = z2compare.check_ergodic_z2(c)
        verdict = levels.overall is not False
    elif combo == ("z2", "mahler", "ergodic"):
        verdict = z2compare.check_ergodic_mahler_z2(c)
    else:
        raise _CliError("unsupported combination: --ring %s --basis %s --check %s" % combo)
    report = {
        "command": "verify",
        "ring": args.ring,
        "basis": args.basis,
        "check": args.check,
        "precision": c.precision,
        "verdict": verdict,
    }
    if levels is not None:
        report["levels"] = levels.json_dict()
    if undetermined is not None:
        report["undetermined_indices"] = undetermined
    _emit(args, report)
    return 0 if verdict else 1


def _cmd_expand(args):
    t = _load_table(args.table)
    f2t = isinstance(t, dynamics.FunctionTable)
    if args.basis == "vdp":
        out = vanderput.to_vdp(t) if f2t else z2compare.to_vdp_z2(t)
    elif f2t:
        out = carlitz.to_carlitz(t)
    else:
        raise _CliError("carlitz expansion needs an F2T table")
    _emit(args, out.json_dict())
    return 0


def _cmd_eval(args):
    kind, c = _load_coeffs(args.coeffs)
    c = _restricted(kind, c, args.prec)
    k = c.precision
    x = parse_hex(args.x)
    if x >> k:
        raise _CliError("--x out of range for precision %d" % k)
    if kind == ("F2T", "vanderput"):
        value = vanderput.from_vdp(c, x)
    elif kind == ("F2T", "carlitz"):
        value = carlitz.from_carlitz(c, x)
    elif kind == ("Z2", "vanderput"):
        value = z2compare.from_vdp_z2(c, x)
    else:
        value = z2compare.mahler_eval(c, x)
    _emit(args, {
        "command": "eval",
        "ring": "f2t" if kind[0] == "F2T" else "z2",
        "basis": {v: f for f, v in _BASIS.items()}[kind[1]],
        "precision": k,
        "x": to_hex(x),
        "value": to_hex(value),
    })
    return 0


def _cmd_convert(args):
    if args.from_basis == args.to_basis:
        raise _CliError("--from and --to must differ")
    kind, c = _load_coeffs(args.coeffs)
    if kind != ("F2T", _BASIS[args.from_basis]):
        raise _CliError("coefficient file is %s/%s but --from says %s" % (kind + (args.from_basis,)))
    if args.from_basis == "vdp":
        out = carlitz.to_carlitz(vanderput.vdp_table(c))
    else:
        out = vanderput.to_vdp(carlitz.carlitz_table(c))
    _emit(args, out.json_dict())
    return 0


def _cmd_gen_cycle(args):
    if args.data:
        d = cyclegen.CycleData.from_json_dict(_read_json(args.data))
        if args.n is not None and args.n != d.n:
            raise _CliError("--n %d disagrees with the data file depth %d" % (args.n, d.n))
    elif args.n is None:
        raise _CliError("gen-cycle needs --n N or --data FILE")
    elif args.n < 0:
        raise _CliError("--n must be non-negative")
    else:
        d = cyclegen.random_data(args.seed, args.n)
    seq, t = cyclegen.gen_cycle(d)
    report = t.json_dict()
    report["sequence"] = [to_hex(x) for x in seq]
    report["data"] = d.json_dict()
    _emit(args, report)
    return 0


def _cmd_keystream(args):
    kind, c = _load_coeffs(args.coeffs)
    c = _restricted(kind, c, args.prec)
    k = c.precision
    x0 = parse_hex(args.x0)
    if x0 >> k:
        raise _CliError("--x0 out of range for precision %d" % k)
    if args.steps < 1:
        raise _CliError("--steps must be positive")
    if args.bit is not None and not 0 <= args.bit < k:
        raise _CliError("--bit must be between 0 and %d" % (k - 1))
    if kind == ("F2T", "vanderput"):
        t = vanderput.vdp_table(c)
    elif kind == ("F2T", "carlitz"):
        t = carlitz.carlitz_table(c)
    elif kind == ("Z2", "vanderput"):
        t = z2compare.vdp_table_z2(c)
    else:
        t = z2compare.mahler_table(c)
    xs = dynamics.orbit(t, x0, args.steps)
    if not args.quiet:
        for x in xs:
            print("%d" % ((x >> args.bit) & 1) if args.bit is not None else to_hex(x))
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "expand": _cmd_expand,
    "eval": _cmd_eval,
    "convert": _cmd_convert,
    "gen-cycle": _cmd_gen_cycle,
    "keystream": _cmd_keystream,
}


def run(argv=None):
    """Parse argv and execute; returns the exit code instead of raising."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except _CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, KeyError, TypeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def main():
    sys.exit(run())
