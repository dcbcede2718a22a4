"""Command-line front end: every computation and figure dataset as CSV.

Configuration precedence, highest first: explicit flags, then KEY=VALUE pairs
from --config, then built-in defaults. Config keys are the flag names with
underscores (gamma_g=0.3); values go through the same parsing as the flag.
Output is CSV with a header row, comma separator, '.' decimals, to stdout or
--out. Exit codes: 0 success, 1 domain error (message on stderr), 2 usage.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import figures
from .capacity import (
    c_separation_condition,
    capacity_curves,
    positivity_condition,
    secrecy_capacity,
)
from .channel import (
    WiretapChannelParams,
    density_bob,
    density_eve,
    mixture_density_bob,
    mixture_density_eve,
)
from .code import bits_to_bpsk, bits_to_hex, decode, encode, hash_bits, hex_to_bits, make_ecc
from .geometry import GeometryConfig, alpha, beta, gamma_g, eve_stronger, protected_region_map
from .leakage import CodeParams, min_leakage_bound
from .sim import exact_leakage, make_eve_quantizer, run_reliability


def _linspace_spec(text: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected LO:HI:COUNT")
    lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    if count < 1:
        raise argparse.ArgumentTypeError("COUNT must be >= 1")
    return np.linspace(lo, hi, count)


def _channel_flags(sub: argparse.ArgumentParser, gamma_g_default: float, gamma_n_default: float):
    sub.add_argument("--gamma-g", type=float, default=gamma_g_default)
    sub.add_argument("--gamma-n", type=float, default=gamma_n_default)
    sub.add_argument("--n0", type=float, default=1.0)
    sub.add_argument("--e0", type=float, default=1.0)


def _common_flags(sub: argparse.ArgumentParser):
    sub.add_argument("--config", help="KEY=VALUE config file; flags still win")
    sub.add_argument("--out", help="write CSV here instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="satwiretap",
        description="keyless physical-layer secrecy toolkit for satellite links",
    )
    subs = parser.add_subparsers(dest="command", metavar="SUBCOMMAND")
    by_name: Dict[str, argparse.ArgumentParser] = {}

    g = subs.add_parser("geometry", help="gamma_g from link geometry, or a region map")
    g.add_argument("--rho-b", type=float, default=1000.0, help="Alice-Bob distance, km")
    g.add_argument("--rho-e", type=float, default=1000.0, help="Alice-Eve distance, km")
    g.add_argument("--theta-e", type=float, default=2.0, help="Eve off-axis angle, degrees")
    g.add_argument("--r", type=float, default=2.0, help="Eve path-loss exponent")
    g.add_argument("--a", type=float, default=2.0, help="antenna decay exponent")
    g.add_argument("--mu", type=float, default=1.0, help="relative antenna gain in [0,1]")
    g.add_argument("--grid", help="region map: THETA_LO:HI:N,RATIO_LO:HI:N")
    _common_flags(g)
    by_name["geometry"] = g

    c = subs.add_parser("capacity", help="secrecy capacity point or SNR sweep")
    _channel_flags(c, 0.3, 1.0)
    c.add_argument("--snr-sweep", help="SNR sweep in dB: LO:HI:N")
    _common_flags(c)
    by_name["capacity"] = c

    d = subs.add_parser("densities", help="mixture pdf samples at Bob or Eve")
    d.add_argument("--side", choices=("bob", "eve"), default="bob")
    _channel_flags(d, 0.5, 1.0)
    d.add_argument("--points", type=int, default=401)
    _common_flags(d)
    by_name["densities"] = d

    b = subs.add_parser("bound", help="leakage bound curve over s and its minimum")
    b.add_argument("--n", type=int, default=32400, help="block length")
    b.add_argument("--k-prime", type=int, default=None, help="sacrifice bits")
    b.add_argument("--rho-sec", type=float, default=None, help="wiretap rate k'/n")
    _channel_flags(b, 0.3, 2.0)
    b.add_argument("--s-grid", type=int, default=400, help="s samples in (0,1)")
    _common_flags(b)
    by_name["bound"] = b

    k = subs.add_parser("code", help="encode/decode/hash with hex bit words")
    k.add_argument("--op", choices=("encode", "decode", "hash"), default=None)
    k.add_argument("--k", type=int, default=None, help="secret bits")
    k.add_argument("--k-prime", type=int, default=None, help="sacrifice bits")
    k.add_argument("--ecc", choices=("identity", "rep3", "hamming74"), default="identity")
    k.add_argument("--seed", default=None, help="hash seed, hex, k+k'-1 bits")
    k.add_argument("--message", default=None, help="encode: k bits, hex")
    k.add_argument("--sacrifice", default=None, help="encode: k' bits, hex")
    k.add_argument("--word", default=None, help="decode: n received bits / hash: k+k' bits")
    _common_flags(k)
    by_name["code"] = k

    s = subs.add_parser("simulate", help="Monte-Carlo reliability run on Bob's channel")
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--k-prime", type=int, default=0)
    s.add_argument("--ecc", choices=("identity", "rep3", "hamming74"), default="identity")
    _channel_flags(s, 0.5, 1.0)
    s.add_argument("--trials", type=int, default=100000)
    s.add_argument("--master-seed", type=int, default=1)
    s.add_argument("--hash-seed", default=None, help="fix the hash seed, hex")
    s.add_argument("--block-size", type=int, default=8192)
    s.add_argument("--threads", type=int, default=1, help="worker cap")
    _common_flags(s)
    by_name["simulate"] = s

    o = subs.add_parser("oracle", help="exact quantized leakage on a tiny instance")
    o.add_argument("--n", type=int, default=4)
    o.add_argument("--k", type=int, default=1)
    o.add_argument("--k-prime", type=int, default=3)
    o.add_argument("--ecc", choices=("identity", "rep3", "hamming74"), default="identity")
    o.add_argument("--levels", type=int, default=8, help="Eve quantizer levels")
    _channel_flags(o, 0.3, 2.0)
    o.add_argument("--per-seed", action="store_true", help="emit one row per hash seed")
    _common_flags(o)
    by_name["oracle"] = o

    rp = subs.add_parser("reproduce", help="write the dataset behind one figure")
    rp.add_argument("--figure", type=int, choices=range(1, 12), default=None, metavar="1..11")
    _common_flags(rp)
    by_name["reproduce"] = rp

    return parser, by_name


def _load_config(path: str) -> Dict[str, str]:
    pairs = {}
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected KEY=VALUE, got {raw.strip()!r}")
            key, value = line.split("=", 1)
            pairs[key.strip()] = value.strip()
    return pairs


def _apply_config(sub: argparse.ArgumentParser, pairs: Dict[str, str]):
    actions = {a.dest: a for a in sub._actions}
    converted = {}
    for key, value in pairs.items():
        action = actions.get(key)
        if action is None:
            sub.error(f"unknown config key {key!r}")
        if isinstance(action, (argparse._StoreTrueAction, argparse._StoreFalseAction)):
            converted[key] = value.lower() in ("1", "true", "yes", "on")
        elif action.type is not None:
            converted[key] = action.type(value)
        else:
            converted[key] = value
    sub.set_defaults(**converted)


def _emit(fields: List[str], rows: List[dict], out: Optional[str]) -> None:
    stream = open(out, "w", newline="", encoding="utf-8") if out else sys.stdout
    try:
        writer = csv.DictWriter(stream, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    finally:
        if out:
            stream.close()


def _params_from(args) -> WiretapChannelParams:
    return WiretapChannelParams(
        gamma_g=args.gamma_g, gamma_n=args.gamma_n, n0=args.n0, e0=args.e0
    )


def _cmd_geometry(args) -> None:
    if args.grid:
        theta_spec, _, ratio_spec = args.grid.partition(",")
        if not ratio_spec:
            raise ValueError("--grid needs THETA_LO:HI:N,RATIO_LO:HI:N")
        rows = protected_region_map(
            _linspace_spec(theta_spec),
            _linspace_spec(ratio_spec),
            r=args.r,
            a=args.a,
            mu=args.mu,
            rho_b_km=args.rho_b,
        )
        _emit(["theta_deg", "rho_ratio", "gamma_g", "protected"], rows, args.out)
        return
    config = GeometryConfig(
        rho_b_km=args.rho_b,
        rho_e_km=args.rho_e,
        theta_e_deg=args.theta_e,
        r=args.r,
        a=args.a,
        mu=args.mu,
    )
    row = {
        "rho_b_km": args.rho_b,
        "rho_e_km": args.rho_e,
        "theta_e_deg": args.theta_e,
        "r": args.r,
        "a": args.a,
        "mu": args.mu,
        "beta": beta(args.r, args.rho_b, args.rho_e),
        "alpha": alpha(args.theta_e, args.a),
        "gamma_g": gamma_g(config),
        "eve_stronger": int(eve_stronger(config)),
    }
    _emit(list(row), [row], args.out)


def _cmd_capacity(args) -> None:
    params = _params_from(args)
    if args.snr_sweep:
        snr_db = _linspace_spec(args.snr_sweep)
        rows = capacity_curves(10.0 ** (snr_db / 10.0), params)
        _emit(["snr_db", "c_bob", "c_eve", "c_s", "gauss_ref", "bsc_ref"], rows, args.out)
        return
    res = secrecy_capacity(params)
    row = {
        "gamma_g": args.gamma_g,
        "gamma_n": args.gamma_n,
        "n0": args.n0,
        "e0": args.e0,
        "c_bob": res.c_bob,
        "c_eve": res.c_eve,
        "c_s": res.c_s,
        "positive_condition": int(positivity_condition(params)),
        "c_separation": int(c_separation_condition(params)),
    }
    _emit(list(row), [row], args.out)


def _cmd_densities(args) -> None:
    params = _params_from(args)
    if args.points < 2:
        raise ValueError("--points must be >= 2")
    if args.side == "bob":
        amp, var = params.bob_amplitude, params.bob_noise_var
        one, mix = density_bob, mixture_density_bob
    else:
        amp, var = params.eve_amplitude, params.eve_noise_var
        one, mix = density_eve, mixture_density_eve
    span = amp + 4.0 * math.sqrt(var)
    rows = [
        {
            "y": float(y),
            "pdf_plus": float(one(y, +1, params)),
            "pdf_minus": float(one(y, -1, params)),
            "pdf_mix": float(mix(y, params)),
        }
        for y in np.linspace(-span, span, args.points)
    ]
    _emit(["y", "pdf_plus", "pdf_minus", "pdf_mix"], rows, args.out)


def _cmd_bound(args) -> None:
    if args.k_prime is not None and args.rho_sec is not None:
        raise ValueError("give --k-prime or --rho-sec, not both")
    if args.k_prime is not None:
        k_prime = args.k_prime
    else:
        rho = 0.1 if args.rho_sec is None else args.rho_sec
        k_prime = int(round(rho * args.n))
    code = CodeParams(n=args.n, k=args.n - k_prime, k_prime=k_prime)
    result = min_leakage_bound(code, _params_from(args), s_grid_resolution=args.s_grid)
    rows = [
        {"s": s, "log2_bound": value, "is_min": 0}
        for s, value in result.curve
    ]
    rows.append({"s": result.s_star, "log2_bound": result.log2_bound, "is_min": 1})
    _emit(["s", "log2_bound", "is_min"], rows, args.out)


def _require(args, names: Sequence[str]) -> None:
    missing = [name for name in names if getattr(args, name.replace("-", "_")) is None]
    if missing:
        raise ValueError(f"--op {args.op} requires --" + ", --".join(missing))


def _cmd_code(args) -> None:
    if args.op is None:
        raise ValueError("--op is required (encode, decode, or hash)")
    _require(args, ["k", "k-prime", "seed"])
    k, kp = args.k, args.k_prime
    ecc = make_ecc(args.ecc, k + kp)
    seed = hex_to_bits(args.seed, k + kp - 1)
    if args.op == "encode":
        _require(args, ["message", "sacrifice"])
        m = hex_to_bits(args.message, k)
        l = hex_to_bits(args.sacrifice, kp)
        cw = encode(m, l, seed, ecc)
        row = {"op": "encode", "n": ecc.block_length, "codeword": bits_to_hex(cw)}
    elif args.op == "decode":
        _require(args, ["word"])
        received = hex_to_bits(args.word, ecc.block_length)
        m_hat = decode(bits_to_bpsk(received), seed, ecc, k)
        row = {"op": "decode", "n": ecc.block_length, "message": bits_to_hex(m_hat)}
    else:
        _require(args, ["word"])
        v = hex_to_bits(args.word, k + kp)
        row = {"op": "hash", "n": ecc.block_length, "digest": bits_to_hex(hash_bits(v, seed, k, kp))}
    _emit(list(row), [row], args.out)


def _cmd_simulate(args) -> None:
    code = CodeParams(n=args.n, k=args.k, k_prime=args.k_prime)
    ecc = make_ecc(args.ecc, args.k + args.k_prime)
    hash_seed = None
    if args.hash_seed is not None:
        hash_seed = hex_to_bits(args.hash_seed, args.k + args.k_prime - 1)
    report = run_reliability(
        code,
        ecc,
        _params_from(args),
        trials=args.trials,
        master_seed=args.master_seed,
        workers=args.threads,
        block_size=args.block_size,
        hash_seed=hash_seed,
    )
    row = {"master_seed": args.master_seed, **report.as_dict()}
    _emit(list(row), [row], args.out)


def _cmd_oracle(args) -> None:
    code = CodeParams(n=args.n, k=args.k, k_prime=args.k_prime)
    ecc = make_ecc(args.ecc, args.k + args.k_prime)
    params = _params_from(args)
    quantizer = make_eve_quantizer(params, levels=args.levels)
    report = exact_leakage(code, ecc, quantizer, params)
    if args.per_seed:
        rows = [{"seed_hex": h, "leak_bits": leak} for h, leak in report.per_seed]
        _emit(["seed_hex", "leak_bits"], rows, args.out)
        return
    row = {
        "n": report.n,
        "k": report.k,
        "k_prime": report.k_prime,
        "levels": report.levels,
        "exact_leak_bits": report.exact_leak_bits,
        "bound_log2": report.bound_log2,
        "bound_bits": report.bound_bits,
        "bound_holds": int(report.exact_leak_bits <= report.bound_bits or report.bound_bits > report.k),
    }
    _emit(list(row), [row], args.out)


def _cmd_reproduce(args) -> None:
    if args.figure is None:
        raise ValueError("--figure is required (1..11)")
    fields, rows = figures.figure_data(args.figure)
    _emit(fields, rows, args.out)


_COMMANDS = {
    "geometry": _cmd_geometry,
    "capacity": _cmd_capacity,
    "densities": _cmd_densities,
    "bound": _cmd_bound,
    "code": _cmd_code,
    "simulate": _cmd_simulate,
    "oracle": _cmd_oracle,
    "reproduce": _cmd_reproduce,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser, by_name = build_parser()
    args, _ = parser.parse_known_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return 2
    if getattr(args, "config", None):
        try:
            pairs = _load_config(args.config)
        except OSError as exc:
            print(f"error: cannot read config: {exc}", file=sys.stderr)
            return 1
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        _apply_config(by_name[args.command], pairs)
    args = parser.parse_args(argv)
    try:
        _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
