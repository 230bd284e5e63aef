"""Command-line front end.

Subcommands: eigenvalues, euler, beta-table, lvalue, verify.  Shared flags
can also come from LIFTSPIN_* environment variables; explicit flags win.

Exit codes: 0 success, 1 verification failure, 2 usage error (argparse or
inconsistent flag combinations), 3 unsupported input (irrational
eigenspace, genus or expansion caps, out-of-range evaluation points).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from . import identities
from .beta import table as beta_table
from .errors import OutOfConvergenceRegion, UnsupportedInput, UnsupportedWeight
from .euler import EXPANSION_DEGREE_CAP, LocalFactor
from .qexp import (
    DEFAULT_PRECISION,
    EigenformData,
    eigenforms,
    hecke_eigenvalue,
    load_eigenvalue_table,
    primes_up_to,
)

EULER_IDENTITIES = ("main_theorem", "ikeda_spinor", "ikeda_standard",
                    "miyawaki_standard", "example_deg3", "example_deg5",
                    "example_deg7")
VERIFY_IDENTITIES = identities.IDENTITY_IDS + ("all",)


@dataclass
class RunConfig:
    """Everything one invocation needs; numeric invariants checked up front."""
    command: str
    n: int = 2
    k: int = 10
    mode: str = "symbolic"
    primes: List[int] = field(default_factory=list)
    precision: int = DEFAULT_PRECISION
    output: Optional[str] = None
    format: str = "json"

    def validate_numeric(self):
        if self.mode == "numeric" and (self.k + self.n) % 2:
            raise ValueError(
                f"numeric mode needs k+n even, got k={self.k}, n={self.n}")


def _env(name: str, fallback=None):
    return os.environ.get(f"LIFTSPIN_{name}", fallback)


def _env_int(name: str, fallback=None):
    raw = _env(name)
    return int(raw) if raw is not None else fallback


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liftspin",
        description="Local Euler factors of lifted Siegel eigenforms and "
                    "their factorization identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def shared(p: argparse.ArgumentParser):
        p.add_argument("--n", type=int, default=_env_int("N", 2))
        p.add_argument("--k", type=int, default=_env_int("K", 10))
        p.add_argument("--mode", choices=("symbolic", "numeric"),
                       default=_env("MODE", "symbolic"))
        p.add_argument("--prime", type=int, default=_env_int("PRIME"))
        p.add_argument("--primes-up-to", type=int,
                       default=_env_int("PRIMES_UP_TO"))
        p.add_argument("--precision", type=int,
                       default=_env_int("PRECISION", DEFAULT_PRECISION))
        p.add_argument("--eigenvalues-file", action="append", default=None,
                       metavar="[ROLE=]PATH",
                       help="eigenvalue table '<p> <num>[/<den>]' per line; "
                            "prefix f= or g= when two forms are in play")
        p.add_argument("--format", choices=("json", "text"),
                       default=_env("FORMAT", "json"))
        p.add_argument("--output", default=_env("OUTPUT"))

    p = sub.add_parser("eigenvalues", help="Hecke eigenvalues of one eigenform")
    p.add_argument("--weight", type=int, required=True)
    shared(p)

    p = sub.add_parser("euler", help="emit one side of one identity as a factor")
    p.add_argument("--identity", choices=EULER_IDENTITIES, required=True)
    p.add_argument("--side", choices=("lhs", "rhs"), required=True)
    p.add_argument("--factored", action="store_true",
                   help="emit the root list instead of expanded coefficients")
    p.add_argument("--expansion-cap", type=int, default=EXPANSION_DEGREE_CAP)
    shared(p)

    p = sub.add_parser("beta-table", help="dump the alpha/beta table for one n")
    shared(p)

    p = sub.add_parser("lvalue", help="truncated Euler product of the main "
                                      "identity (non-rigorous approximation)")
    p.add_argument("--identity", choices=("main_theorem",), default="main_theorem")
    p.add_argument("--side", choices=("lhs", "rhs"), required=True)
    p.add_argument("--s", required=True, help="evaluation point, e.g. 25 or 25+2j")
    shared(p)

    p = sub.add_parser("verify", help="run identity verifications")
    p.add_argument("--identity", choices=VERIFY_IDENTITIES, default=None)
    p.add_argument("--all", action="store_true")
    p.add_argument("--symbolic", action="store_true",
                   help="shorthand for --mode symbolic")
    p.add_argument("--numeric", action="store_true",
                   help="shorthand for --mode numeric")
    p.add_argument("--witness", action="store_true",
                   help="include the first differing coefficient on failure")
    p.add_argument("--negative-control", action="store_true",
                   help="self test: corrupted runs must fail with a witness")
    shared(p)

    return parser


# -- output plumbing -----------------------------------------------------------

def _emit(text: str, output: Optional[str]):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _dump(data, fmt: str, as_text) -> str:
    if fmt == "json":
        return json.dumps(data, indent=2)
    return as_text(data)


# -- eigenform data ------------------------------------------------------------

def _parse_table_args(args) -> Dict[str, str]:
    tables: Dict[str, str] = {}
    for entry in args.eigenvalues_file or ():
        role, sep, path = entry.partition("=")
        if sep and role in ("f", "g"):
            tables[role] = path
        else:
            tables["only"] = entry
    return tables


def _form_for(role: str, weight: int, precision: int,
              tables: Dict[str, str]) -> EigenformData:
    path = tables.get(role) or tables.get("only")
    if path:
        return EigenformData.from_eigenvalue_table(weight, load_eigenvalue_table(path))
    forms = eigenforms(weight, precision)
    if len(forms) != 1:
        raise UnsupportedWeight(
            f"weight {weight} has {len(forms)} rational eigenforms; "
            f"pick one via --eigenvalues-file")
    return forms[0]


def _numeric_pair(args, tables) -> tuple:
    if "only" in tables:
        raise ValueError("two eigenforms are in play; tag tables as "
                         "--eigenvalues-file f=PATH / g=PATH")
    f = _form_for("f", 2 * args.k, args.precision, tables)
    g = _form_for("g", args.k + args.n, args.precision, tables)
    return f, g


def _primes_from(args) -> List[int]:
    if args.prime is not None:
        return [args.prime]
    if args.primes_up_to is not None:
        return primes_up_to(args.primes_up_to)
    return []


# -- subcommands -----------------------------------------------------------------

def cmd_eigenvalues(args) -> int:
    weight = args.weight
    primes = _primes_from(args)
    if not primes:
        raise ValueError("eigenvalues needs --prime or --primes-up-to")
    tables = _parse_table_args(args)
    form = _form_for("only", weight, args.precision, tables)
    rows = [{"p": p, "lambda": str(hecke_eigenvalue(form, p))} for p in primes]
    data = {"weight": weight, "eigenvalues": rows}

    def as_text(d):
        width = max(len(str(r["p"])) for r in d["eigenvalues"])
        lines = [f"# weight {d['weight']}"]
        lines += [f"{r['p']:>{width}} {r['lambda']}" for r in d["eigenvalues"]]
        return "\n".join(lines)

    _emit(_dump(data, args.format, as_text), args.output)
    return 0


def _identity_sides(identity: str, n: int, k: int):
    if identity == "main_theorem":
        return (identities.miyawaki_spinor_lhs(n, k),
                identities.main_theorem_rhs(n, k))
    if identity == "ikeda_spinor":
        return identities.ikeda_spinor_sides(n, k)
    if identity == "ikeda_standard":
        return identities.ikeda_standard_sides(n, k)
    if identity == "miyawaki_standard":
        return identities.miyawaki_standard_sides(n, k)
    if identity.startswith("example_deg"):
        wanted = {"example_deg3": 2, "example_deg5": 3, "example_deg7": 4}[identity]
        if n != wanted:
            raise ValueError(f"{identity} is the n={wanted} case, got --n {n}")
        return (identities.miyawaki_spinor_lhs(n, k),
                identities.example_display_rhs(n, k))
    raise ValueError(f"euler does not support identity {identity!r}")


def _identity_needs_g(identity: str) -> bool:
    return identity not in ("ikeda_spinor", "ikeda_standard")


def cmd_euler(args) -> int:
    config = RunConfig("euler", args.n, args.k, args.mode,
                       _primes_from(args), args.precision, args.output, args.format)
    config.validate_numeric()
    needs_g = _identity_needs_g(args.identity)
    lhs, rhs = _identity_sides(args.identity, args.n, args.k)
    factor = lhs if args.side == "lhs" else rhs
    # relabel side-independently: equal sides must serialize identically
    factor = LocalFactor(f"{args.identity}[n={args.n},k={args.k}]",
                         factor.roots, factor.mode, factor.prime)
    if args.mode == "numeric":
        if len(config.primes) != 1:
            raise ValueError("numeric euler needs exactly one --prime")
        p = config.primes[0]
        tables = _parse_table_args(args)
        f = _form_for("f", 2 * args.k, args.precision, tables)
        g = _form_for("g", args.k + args.n, args.precision, tables) if needs_g else None
        alpha, beta = identities.satake_values(f, g, args.n, args.k, p)
        factor = factor.instantiate(alpha, beta, p ** 0.5, p)
    data = factor.factored_json_dict() if args.factored \
        else factor.to_json_dict(cap=args.expansion_cap)

    def as_text(d):
        lines = [f"label:  {d['label']}", f"degree: {d['degree']}"]
        key = "roots" if "roots" in d else "coeffs"
        for i, entry in enumerate(d[key]):
            lines.append(f"{key[:-1]} {i}: {json.dumps(entry)}")
        return "\n".join(lines)

    _emit(_dump(data, args.format, as_text), args.output)
    return 0


def cmd_beta_table(args) -> int:
    rows = [{"m": m, "r": r, "alpha": a, "beta": b}
            for (m, r, a, b) in beta_table(args.n).entries()]
    data = {"n": args.n, "entries": rows}

    def as_text(d):
        lines = [f"# n = {d['n']}", f"{'m':>3} {'r':>5} {'alpha':>8} {'beta':>8}"]
        lines += [f"{r['m']:>3} {r['r']:>5} {r['alpha']:>8} {r['beta']:>8}"
                  for r in d["entries"]]
        return "\n".join(lines)

    _emit(_dump(data, args.format, as_text), args.output)
    return 0


def cmd_lvalue(args) -> int:
    try:
        s = complex(args.s)
    except ValueError:
        raise ValueError(f"cannot parse --s {args.s!r} as a complex number")
    n, k = args.n, args.k
    threshold = (n - 0.5) * k + 1
    if s.real <= threshold:
        raise OutOfConvergenceRegion(
            f"Re(s) = {s.real} is not inside the half-plane Re(s) > {threshold}")
    config = RunConfig("lvalue", n, k, "numeric", _primes_from(args),
                       args.precision, args.output, args.format)
    config.validate_numeric()
    tables = _parse_table_args(args)
    f, g = _numeric_pair(args, tables)
    lhs, rhs = _identity_sides(args.identity, n, k)
    side = lhs if args.side == "lhs" else rhs
    value = 1 + 0j
    increment = 0.0
    for p in config.primes:
        alpha, beta = identities.satake_values(f, g, n, k, p)
        factor = side.instantiate(alpha, beta, p ** 0.5, p)
        before = value
        value /= factor.evaluate(p ** (-s))
        increment = abs(value - before)
    data = {
        "identity": args.identity,
        "side": args.side,
        "n": n, "k": k,
        "s": [s.real, s.imag],
        "primes_used": len(config.primes),
        "value": [value.real, value.imag],
        "last_prime_increment": increment,
        "note": "non-rigorous approximation (truncated Euler product, no tail bound)",
    }

    def as_text(d):
        return "\n".join([
            f"L({d['s'][0]}+{d['s'][1]}j, {d['identity']}/{d['side']}) "
            f"~ {d['value'][0]}+{d['value'][1]}j",
            f"primes used: {d['primes_used']}",
            f"last prime increment: {d['last_prime_increment']}",
            f"note: {d['note']}",
        ])

    _emit(_dump(data, args.format, as_text), args.output)
    return 0


def _verify_reports(args) -> List[identities.VerificationReport]:
    n, k = args.n, args.k
    if args.negative_control:
        return identities.negative_control_reports(max(n, 2), k)
    if args.all or args.identity in (None, "all"):
        if args.mode == "numeric":
            tables = _parse_table_args(args)
            f, g = _numeric_pair(args, tables)
            primes = _primes_from(args) or [2, 3, 5, 7, 11]
            return [identities.verify_main_theorem(n, k, mode="numeric",
                                                   prime=p, f=f, g=g)
                    for p in primes]
        return identities.full_symbolic_suite()
    identity = args.identity
    if identity == "main_theorem":
        if args.mode == "numeric":
            tables = _parse_table_args(args)
            f, g = _numeric_pair(args, tables)
            primes = _primes_from(args) or [2]
            return [identities.verify_main_theorem(n, k, mode="numeric",
                                                   prime=p, f=f, g=g)
                    for p in primes]
        return [identities.verify_main_theorem(n, k)]
    if identity == "ikeda_standard":
        if args.mode == "numeric":
            tables = _parse_table_args(args)
            f = _form_for("f", 2 * k, args.precision, tables)
            primes = _primes_from(args) or [2]
            return [identities.verify_ikeda_standard(n, k, mode="numeric",
                                                     prime=p, f=f)
                    for p in primes]
        return [identities.verify_ikeda_standard(n, k)]
    if args.mode == "numeric":
        raise ValueError(f"identity {identity!r} supports symbolic mode only")
    if identity == "ikeda_spinor":
        return [identities.verify_ikeda_spinor(n, k)]
    if identity == "miyawaki_standard":
        return [identities.verify_miyawaki_standard(n, k)]
    if identity == "c1_frobenius":
        return [identities.verify_c1_frobenius(n, k)]
    if identity == "beta_epsilon_match":
        return [identities.verify_deg7_epsilons()]
    if identity.startswith("example_deg"):
        wanted = {"example_deg3": 2, "example_deg5": 3, "example_deg7": 4}[identity]
        return [identities.verify_example_regroup(wanted, k)]
    raise ValueError(f"unknown identity {identity!r}")


def cmd_verify(args) -> int:
    if getattr(args, "symbolic", False) and getattr(args, "numeric", False):
        raise ValueError("--symbolic and --numeric are mutually exclusive")
    if getattr(args, "symbolic", False):
        args.mode = "symbolic"
    if getattr(args, "numeric", False):
        args.mode = "numeric"
    config = RunConfig("verify", args.n, args.k, args.mode,
                       _primes_from(args), args.precision, args.output, args.format)
    config.validate_numeric()
    reports = _verify_reports(args)
    payload = []
    for rep in reports:
        entry = rep.to_json_dict()
        if not args.witness:
            entry.pop("witness", None)
        payload.append(entry)

    def as_text(entries):
        lines = []
        for e in entries:
            ps = " ".join(f"{key}={val}" for key, val in e["parameters"].items()
                          if val is not None)
            lines.append(f"{e['verdict'].upper():4} {e['identity']} {ps}")
            if args.witness and e.get("witness"):
                lines.append(f"     witness: {json.dumps(e['witness'])}")
        return "\n".join(lines)

    _emit(_dump(payload, args.format, as_text), args.output)
    if args.negative_control:
        # the self test passes exactly when every corrupted run fails loudly
        detected = all(r.verdict == "fail" and r.witness for r in reports)
        return 0 if detected else 1
    return 0 if all(r.passed for r in reports) else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "eigenvalues": cmd_eigenvalues,
        "euler": cmd_euler,
        "beta-table": cmd_beta_table,
        "lvalue": cmd_lvalue,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except UnsupportedInput as exc:
        print(f"liftspin: unsupported input: {exc}", file=sys.stderr)
        return 3
    except (ValueError, IndexError, OSError) as exc:
        print(f"liftspin: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
