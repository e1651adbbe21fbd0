"""Command-line interface: ``fqsums <command> [options]``.

Exit status is 0 on success, 1 when a verification does not match or a
reconstruction fails, and 2 for invalid arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb

from fqsums.carlitz import (
    UnsupportedExponent,
    carlitz_D,
    carlitz_exp_coeffs,
    closed_form,
    exact_prime_sum,
)
from fqsums.field import FieldError, field_of_order, is_prime
from fqsums.polyring import monic_irreducibles
from fqsums.primesum import (
    EnumerationTooLarge,
    SumRequest,
    check_enumeration,
    numeric_prime_sum,
    numeric_zeta,
    psi_count,
    verify,
)
from fqsums.ratfun import ReconstructionError, pade_reconstruct

MAX_PSI_TUPLES = 10**7


class UsageError(Exception):
    pass


def _emit(args, plain: str, obj) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(plain)


def _field(args):
    try:
        return field_of_order(args.q)
    except FieldError as exc:
        raise UsageError(str(exc)) from None


def _positive(args, *names):
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")
        if value < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be >= 1")


def _enumeration_guard(F, dmax):
    try:
        warning = check_enumeration(F.q, dmax)
    except EnumerationTooLarge as exc:
        raise UsageError(str(exc)) from None
    if warning:
        print(f"warning: {warning}", file=sys.stderr)


def cmd_primes(args) -> int:
    F = _field(args)
    _positive(args, "max_degree")
    _enumeration_guard(F, args.max_degree)
    rows = []
    lines = []
    for d in range(1, args.max_degree + 1):
        polys = list(monic_irreducibles(F, d))
        if args.count_only:
            lines.append(f"{d} {len(polys)}")
            rows.append({"degree": d, "count": len(polys)})
        else:
            lines.extend(P.text() for P in polys)
            rows.append({
                "degree": d,
                "count": len(polys),
                "polys": [[F.elem_to_json(c) for c in P.coeffs] for P in polys],
            })
    _emit(args, "\n".join(lines), {"field": F.to_json(), "degrees": rows})
    return 0


def cmd_sum(args) -> int:
    F = _field(args)
    _positive(args, "k", "max_degree")
    _enumeration_guard(F, args.max_degree)
    s = numeric_prime_sum(SumRequest(F, args.k, args.max_degree, not args.all), args.threads)
    _emit(args, s.text(), s.to_json())
    return 0


def cmd_exact(args) -> int:
    F = _field(args)
    _positive(args, "k")
    r = exact_prime_sum(F, args.k)
    _emit(args, r.text(), r.to_json())
    return 0


def cmd_closed(args) -> int:
    F = _field(args)
    _positive(args, "k")
    r = closed_form(F, args.k)
    if r is None:
        _emit(args, "not applicable", None)
    else:
        _emit(args, r.text(), r.to_json())
    return 0


def cmd_verify(args) -> int:
    F = _field(args)
    _positive(args, "k", "max_degree")
    _enumeration_guard(F, args.max_degree)
    rep = verify(F, args.k, args.max_degree, args.threads, args.timing)
    plain = [
        f"q={rep.q} k={rep.k} dmax={rep.dmax} precision={rep.precision}",
        f"match={'true' if rep.match else 'false'}"
        + ("" if rep.match else f" first_mismatch={rep.first_mismatch}"),
        f"exact {rep.exact.text()}",
        f"numeric {rep.numeric.text()}",
    ]
    if rep.millis is not None:
        plain.append(f"millis={rep.millis}")
    _emit(args, "\n".join(plain), rep.to_json())
    return 0 if rep.match else 1


def cmd_reconstruct(args) -> int:
    F = _field(args)
    _positive(args, "k", "max_degree")
    for name in ("num_deg", "den_deg"):
        if getattr(args, name) is None or getattr(args, name) < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be given and >= 0")
    _enumeration_guard(F, args.max_degree)
    s = numeric_prime_sum(SumRequest(F, args.k, args.max_degree, not args.all), args.threads)
    try:
        r = pade_reconstruct(s, args.num_deg, args.den_deg)
    except ReconstructionError as exc:
        print(f"reconstruction failed: {exc}", file=sys.stderr)
        return 1
    _emit(args, r.text(), {"precision": s.N, "result": r.to_json()})
    return 0


def cmd_zeta(args) -> int:
    F = _field(args)
    _positive(args, "k", "max_degree")
    _enumeration_guard(F, args.max_degree)
    s = numeric_zeta(F, args.k, args.max_degree, args.threads)
    _emit(args, s.text(), s.to_json())
    return 0


def cmd_carlitz(args) -> int:
    F = _field(args)
    _positive(args, "terms")
    Ds = [carlitz_D(F, j) for j in range(args.terms)]
    inv = carlitz_exp_coeffs(F, args.terms)
    lines = [f"D_{j} = {D.text()}" for j, D in enumerate(Ds)]
    lines += [f"1/D_{j} = {r.text()}" for j, r in enumerate(inv)]
    _emit(args, "\n".join(lines), {
        "field": F.to_json(),
        "D": [D.to_json() for D in Ds],
        "exp_coeffs": [r.to_json() for r in inv],
    })
    return 0


def cmd_psi(args) -> int:
    if args.p is None or not is_prime(args.p):
        raise UsageError("--p must be a prime")
    if args.r is None or args.r < 0:
        raise UsageError("--r must be given and >= 0")
    if comb(args.r + args.p - 1, args.p - 1) > MAX_PSI_TUPLES:
        raise UsageError("too many tuples to enumerate")
    n = psi_count(args.p, args.r)
    _emit(args, str(n), {"p": args.p, "r": args.r, "psi": n})
    return 0


COMMANDS = {
    "primes": (cmd_primes, "list monic irreducibles by degree"),
    "sum": (cmd_sum, "truncated numeric prime sum"),
    "exact": (cmd_exact, "exact prime sum in F_q(T)"),
    "closed": (cmd_closed, "closed form when one applies"),
    "verify": (cmd_verify, "compare exact and numeric sums"),
    "reconstruct": (cmd_reconstruct, "recover a rational function from the numeric sum"),
    "zeta": (cmd_zeta, "truncated zeta value over monic polynomials"),
    "carlitz": (cmd_carlitz, "D_j and the Carlitz exponential coefficients"),
    "psi": (cmd_psi, "count p-tuples for a prime power"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, help="field order (a prime power)")
    common.add_argument("--k", type=int, help="exponent")
    common.add_argument("--max-degree", type=int, help="largest degree enumerated")
    common.add_argument("--num-deg", type=int, help="numerator degree bound")
    common.add_argument("--den-deg", type=int, help="denominator degree bound")
    common.add_argument("--terms", type=int, help="number of Carlitz terms")
    common.add_argument("--p", type=int, help="prime for psi")
    common.add_argument("--r", type=int, help="exponent for psi")
    common.add_argument("--all", action="store_true", help="sum over all irreducibles, not only monic")
    common.add_argument("--count-only", action="store_true", help="print per-degree counts")
    common.add_argument("--format", choices=("plain", "json"), default="plain")
    common.add_argument("--threads", type=int, default=1, help="worker processes")
    common.add_argument("--timing", action="store_true", help="report elapsed milliseconds")

    parser = argparse.ArgumentParser(prog="fqsums", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    needs_q = args.command != "psi"
    try:
        if needs_q and args.q is None:
            raise UsageError("--q is required")
        if args.threads < 1:
            raise UsageError("--threads must be >= 1")
        return COMMANDS[args.command][0](args)
    except (UsageError, UnsupportedExponent, FieldError) as exc:
        print(f"fqsums {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # remaining bound violations (degree caps, etc.)
        print(f"fqsums {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
