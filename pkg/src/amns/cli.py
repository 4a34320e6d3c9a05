"""Command-line front end: generation, verification, conversions, benchmarks.

Exit codes: 0 success, 1 operational failure (verification or round-trip
mismatch, no system generated), 2 input or file-format errors.
"""

from __future__ import annotations

import argparse
import math
import sys as _sys
from pathlib import Path

from . import arith, gen, oracle, paramfile
from .errors import AmnsError, GammaUnavailableError, InfeasibleBoundsError, ParamFileError
from .system import verify_system


def _err(msg: str) -> None:
    print(f"error: {msg}", file=_sys.stderr)


def _parse_hex(text: str, what: str) -> int:
    try:
        return int(text, 16)
    except ValueError:
        _err(f"invalid hex for {what}: {text!r}")
        raise SystemExit(2)


def _load_params(path: str):
    try:
        return paramfile.load(path)
    except FileNotFoundError:
        _err(f"no such file: {path}")
        raise SystemExit(2)
    except ParamFileError as exc:
        _err(f"{path}: {exc}")
        raise SystemExit(2)


def _coeffs_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part, 0) for part in text.split(","))
    except ValueError:
        _err(f"invalid coefficient list: {text!r}")
        raise SystemExit(2)


def _fmt_coeffs(coeffs) -> str:
    return ",".join(f"-{-c:#x}" if c < 0 else f"{c:#x}" for c in coeffs)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_gen(args: argparse.Namespace) -> int:
    p = _parse_hex(args.p, "--p")
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    gamma = _parse_hex(args.gamma, "--gamma") if args.gamma else None
    cfg = gen.EnumConfig(k=args.k, c=args.c)

    if args.enumerate:
        lams = gen.enumerate_lambda(cfg, p)
        if args.max_lambdas is not None:
            lams = lams[: args.max_lambdas]
    elif args.lam is not None:
        lams = [args.lam]
    else:
        _err("one of --lambda or --enumerate is required")
        return 2

    written = 0
    manifest: list[str] = []
    budget = args.max_systems
    for lam in lams:
        shape = gen.lambda_shape(lam, cfg, p)
        per_lam = budget - written if budget is not None else None
        if per_lam is not None and per_lam <= 0:
            break
        try:
            results = gen.generate(p, args.n, lam, k=args.k, delta=args.delta,
                                   seed=args.seed, max_systems=per_lam, gamma=gamma)
        except GammaUnavailableError as exc:
            print(f"lambda={lam} shape={shape}: gamma-unavailable: {exc}")
            continue
        except InfeasibleBoundsError as exc:
            print(f"lambda={lam} shape={shape}: infeasible-bounds: {exc}")
            continue
        except ValueError as exc:
            _err(str(exc))
            return 2
        for idx, result in enumerate(results):
            name = f"amns_{p.bit_length()}b_n{args.n}_l{lam}_{idx}.params"
            paramfile.save(out_dir / name, result.system,
                           result.tables if args.tables else None)
            print(f"lambda={lam} shape={shape}: wrote {name} "
                  f"(sigma={result.system.sigma:#x}, rho=2^{result.system.rho_exp})")
            manifest.append(f"{name}\t{lam}\t{shape}")
            written += 1
    if args.enumerate and manifest:
        (out_dir / "manifest.tsv").write_text(
            "filename\tlambda\tshape\n" + "\n".join(manifest) + "\n")
    if written == 0:
        _err("no system generated")
        return 1
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    system, tables = _load_params(args.file)
    report = verify_system(system, tables)
    for check in report.checks:
        if check.ok:
            print(f"ok   {check.name}")
        else:
            print(f"FAIL {check.name}: {check.detail}")
    print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def cmd_convert(args: argparse.Namespace) -> int:
    system, tables = _load_params(args.params)
    if tables is None:
        tables = gen.precompute_tables(system)
    beta = _parse_hex(args.beta, "--beta") if args.beta else None
    if args.to_amns:
        value = _parse_hex(args.value, "--value")
        if value >= system.p:
            _err("value must be below p")
            return 2
        if beta is not None:
            elem = arith.dpa_to_amns(value, beta, system, tables)
        elif args.method == 2:
            elem = arith.to_amns_m2(value, system, tables)
        else:
            elem = arith.to_amns_m1(value, system, tables)
        print(_fmt_coeffs(elem.coeffs))
    else:
        coeffs = _coeffs_arg(args.value)
        if len(coeffs) != system.n:
            _err(f"expected {system.n} coefficients")
            return 2
        elem = arith.AmnsElement(coeffs)
        if beta is not None:
            value = arith.dpa_from_amns(elem, beta, system)
        elif args.method == 2:
            value = arith.from_amns_powers(elem, system, tables)
        else:
            value = arith.from_amns_horner(elem, system)
        print(f"{value:#x}")
    return 0


def cmd_mul(args: argparse.Namespace) -> int:
    system, tables = _load_params(args.params)
    if tables is None:
        tables = gen.precompute_tables(system)
    a = _parse_hex(args.a, "--a")
    b = _parse_hex(args.b, "--b")
    if a >= system.p or b >= system.p:
        _err("values must be below p")
        return 2
    ea = arith.to_amns_m1(a, system, tables)
    eb = arith.to_amns_m1(b, system, tables)
    product = arith.from_amns_horner(arith.amns_mul(ea, eb, system), system)
    print(f"{product:#x}")
    return 0


def cmd_roundtrip(args: argparse.Namespace) -> int:
    import random

    system, tables = _load_params(args.params)
    if tables is None:
        tables = gen.precompute_tables(system)
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.trials):
        a = rng.randrange(system.p)
        b = rng.randrange(system.p)
        ea = arith.to_amns_m1(a, system, tables)
        eb = arith.to_amns_m2(b, system, tables)
        prod = arith.amns_mul(ea, eb, system)
        ok = (
            arith.from_amns_horner(ea, system) == a
            and arith.from_amns_powers(eb, system, tables) == b
            and arith.from_amns_horner(prod, system) == a * b % system.p
            and max(abs(c) for c in prod.coeffs) < system.rho
        )
        if not ok:
            failures += 1
            print(f"mismatch: a={a:#x} b={b:#x}")
    print(f"{args.trials} trials, {failures} failures")
    return 1 if failures else 0


def cmd_bench(args: argparse.Namespace) -> int:
    print("system_id\top\ttrials\tmedian_ns\tbaseline_ns\tratio")
    for path in args.params:
        system, tables = _load_params(path)
        if tables is None:
            tables = gen.precompute_tables(system)
        report = oracle.bench_ratio(system, tables, args.trials,
                                    baseline=args.baseline,
                                    system_id=Path(path).stem, seed=args.seed)
        print(f"{report.system_id}\t{report.op}\t{report.trials}\t"
              f"{report.median_ns:.1f}\t{report.baseline_ns:.1f}\t{report.ratio:.3f}")
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    p = _parse_hex(args.p, "--p")
    cfg = gen.EnumConfig(k=args.k, c=args.c)
    om = gen.omega(cfg, p)
    w = int(om)
    values = gen.enumerate_lambda(cfg, p)
    print(f"omega = {om:.2f}")
    print(f"two-term combinations = 4*C({w},2) = {4 * math.comb(w, 2)}")
    print(f"distinct candidates = {len(values)}")
    for lam in values[: args.limit]:
        print(f"{lam}\t{gen.lambda_shape(lam, cfg, p)}")
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amns",
        description="Generate and exercise AMNS parameter sets for a fixed prime.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate parameter sets")
    p_gen.add_argument("--p", required=True, help="prime modulus (hex)")
    p_gen.add_argument("--n", required=True, type=int, help="polynomial length")
    group = p_gen.add_mutually_exclusive_group()
    group.add_argument("--lambda", dest="lam", type=int, help="fixed lambda")
    group.add_argument("--enumerate", action="store_true",
                       help="sweep the lambda shape enumeration")
    p_gen.add_argument("--k", type=int, default=64, help="word size exponent (phi = 2^k)")
    p_gen.add_argument("--c", type=int, default=2, help="extra-limb allowance for omega")
    p_gen.add_argument("--delta", type=int, default=0, help="addition budget")
    p_gen.add_argument("--max-systems", type=int, default=None,
                       help="cap on emitted systems")
    p_gen.add_argument("--max-lambdas", type=int, default=None,
                       help="cap on swept lambda values (with --enumerate)")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--gamma", default=None,
                       help="externally supplied nth root of lambda (hex)")
    p_gen.add_argument("--tables", action="store_true",
                       help="embed precomputed tables in the output files")
    p_gen.add_argument("--out", required=True, help="output directory")
    p_gen.set_defaults(func=cmd_gen)

    p_verify = sub.add_parser("verify", help="check a parameter file")
    p_verify.add_argument("file")
    p_verify.set_defaults(func=cmd_verify)

    p_conv = sub.add_parser("convert", help="convert residues to/from AMNS")
    p_conv.add_argument("--params", required=True)
    p_conv.add_argument("--value", required=True,
                        help="residue (hex) or comma-separated coefficients")
    direction = p_conv.add_mutually_exclusive_group(required=True)
    direction.add_argument("--to-amns", action="store_true")
    direction.add_argument("--from-amns", action="store_true")
    p_conv.add_argument("--method", type=int, choices=(1, 2), default=1)
    p_conv.add_argument("--beta", default=None, help="DPA mask (hex unit mod p)")
    p_conv.set_defaults(func=cmd_convert)

    p_mul = sub.add_parser("mul", help="modular product through the AMNS")
    p_mul.add_argument("--params", required=True)
    p_mul.add_argument("--a", required=True, help="first residue (hex)")
    p_mul.add_argument("--b", required=True, help="second residue (hex)")
    p_mul.set_defaults(func=cmd_mul)

    p_round = sub.add_parser("roundtrip", help="randomized conversion checks")
    p_round.add_argument("--params", required=True)
    p_round.add_argument("--trials", type=int, default=100)
    p_round.add_argument("--seed", type=int, default=0)
    p_round.set_defaults(func=cmd_roundtrip)

    p_bench = sub.add_parser("bench", help="ratio benchmark vs a baseline")
    p_bench.add_argument("--params", required=True, nargs="+")
    p_bench.add_argument("--trials", type=int, default=10000)
    p_bench.add_argument("--baseline", choices=("naive", "montgomery", "self"),
                         default="montgomery")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.set_defaults(func=cmd_bench)

    p_enum = sub.add_parser("enumerate", help="show the lambda enumeration")
    p_enum.add_argument("--p", required=True, help="prime modulus (hex)")
    p_enum.add_argument("--k", type=int, default=64)
    p_enum.add_argument("--c", type=int, default=2)
    p_enum.add_argument("--limit", type=int, default=0,
                        help="print this many leading candidates")
    p_enum.set_defaults(func=cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    except AmnsError as exc:
        _err(str(exc))
        return 1


if __name__ == "__main__":
    _sys.exit(main())
