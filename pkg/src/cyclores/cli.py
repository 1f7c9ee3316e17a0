"""Command-line front end with reproducible JSON output.

Exit codes: 0 success (all assertions passed), 1 usage error,
2 verification failure, 3 internal error.  Single results are printed
as one JSON object; scans and verifications stream JSON lines.  Big
integers are serialized as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cycint import cyc_from_json, field_ctx
from .cycunits import (
    inv_one_plus_zeta,
    unit_minus,
    unit_plus,
    unit_product_check,
)
from .cycint import coeffs_to_json, cyc_mul, cyc_new, cyc_one, galois, norm
from .fltharness import (
    _SIGN_VALUE,
    conjugate_symmetry_report,
    furtwangler_report,
    record_from_json,
    record_to_json,
    scan,
    telescope_replay,
    verify_congruences,
    verify_symbol_identities,
    barlow_abel_check,
)
from .ntheory import is_prime
from .powsym import symbol
from .regulab import h_minus, irregular_pairs, vandiver_witness
from .resfield import ideal_from_modulus, ideal_from_root, ideal_to_json, split_prime

__all__ = ["run", "main", "UsageError"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 instead of argparse's default 2
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _emit(obj, out=None) -> None:
    print(_dump(obj), file=out or sys.stdout)


def _require_prime(value: int, name: str) -> int:
    if not is_prime(value):
        raise UsageError(f"{name}={value} is not prime")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(prog="cyclores", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("split", help="prime ideals above q in the p-th cyclotomic field")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)

    sp = sub.add_parser("symbol", help="p-th power residue symbol exponent")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--w", type=int, help="root of unity labelling a degree-1 ideal")
    sp.add_argument("--modulus", help="comma-separated modulus coefficients (f > 1)")
    sp.add_argument("--alpha", required=True, help="JSON array of p-1 coefficients")

    sp = sub.add_parser("units", help="cyclotomic unit tables and identity checks")
    sp.add_argument("--p", type=int, required=True)

    sp = sub.add_parser("irregular", help="irregular pairs (p, k)")
    sp.add_argument("--p", type=int, required=True)

    sp = sub.add_parser("hminus", help="relative class number h^-")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--precision", type=int, default=None)

    sp = sub.add_parser("vandiver", help="one-sided eigencomponent witness search")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--candidates", type=int, default=10)

    sp = sub.add_parser("scan", help="factor (x^p +- y^p)/(x +- y) and record symbols")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--y", type=int, required=True)
    sp.add_argument("--sign", choices=("plus", "minus"), required=True)
    sp.add_argument("--trial-bound", type=int, default=1_000_000)
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("--out", help="write JSON lines here instead of stdout")

    sp = sub.add_parser("verify", help="check identities on recorded scans")
    sp.add_argument("--in", dest="infile", required=True, help="JSON-lines records file")

    sp = sub.add_parser("telescope", help="replay telescoping symbol chains")
    sp.add_argument("--pmax", type=int, required=True)

    sp = sub.add_parser("barlow", help="evaluate Barlow-Abel relation formats")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--y", type=int, required=True)
    sp.add_argument("--z", type=int, required=True)

    return parser


def _cmd_split(args) -> int:
    ctx = field_ctx(_require_prime(args.p, "p"))
    if not is_prime(args.q):
        raise UsageError(f"q={args.q} is not prime")
    if args.q == args.p:
        raise UsageError("q = p is ramified; choose q != p")
    ideals = split_prime(ctx, args.q)
    _emit({
        "p": args.p,
        "q": args.q,
        "f": ideals[0].f,
        "ideals": [ideal_to_json(ideal) for ideal in ideals],
    })
    return 0


def _cmd_symbol(args) -> int:
    ctx = field_ctx(_require_prime(args.p, "p"))
    if not is_prime(args.q):
        raise UsageError(f"q={args.q} is not prime")
    if (args.w is None) == (args.modulus is None):
        raise UsageError("give exactly one of --w (f=1) or --modulus (f>1)")
    try:
        if args.w is not None:
            ideal = ideal_from_root(ctx, args.q, args.w)
        else:
            coeffs = [int(c) for c in args.modulus.split(",")]
            ideal = ideal_from_modulus(ctx, args.q, coeffs)
        alpha = cyc_from_json(ctx, json.loads(args.alpha))
        e = symbol(alpha, ideal)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit({
        "alpha": coeffs_to_json(alpha),
        "q": args.q,
        "w": ideal_to_json(ideal)["w"],
        "e": e,
    })
    return 0


def _cmd_units(args) -> int:
    ctx = field_ctx(_require_prime(args.p, "p"))
    p = ctx.p
    minus = {str(a): coeffs_to_json(unit_minus(ctx, a)) for a in range(1, p)}
    plus = {str(a): coeffs_to_json(unit_plus(ctx, a)) for a in range(1, p)}
    checks = {
        "minus_antisymmetry": all(
            unit_minus(ctx, a) == -unit_minus(ctx, p - a) for a in range(1, p)
        ),
        "plus_symmetry": all(
            unit_plus(ctx, a) == unit_plus(ctx, p - a) for a in range(1, p)
        ),
        "norms_unit": all(
            norm(unit_minus(ctx, a)) in (1, -1) and norm(unit_plus(ctx, a)) in (1, -1)
            for a in range(1, p)
        ),
        "product_identity": unit_product_check(ctx),
        "inverse_check": cyc_mul(
            cyc_new(ctx, [(0, 1), (1, 1)]), inv_one_plus_zeta(ctx)
        ) == cyc_one(ctx),
    }
    _emit({"p": p, "minus": minus, "plus": plus, "checks": checks})
    return 0 if all(checks.values()) else 2


def _cmd_irregular(args) -> int:
    p = _require_prime(args.p, "p")
    pairs = irregular_pairs(p)
    _emit({"p": p, "irregular_pairs": [pair.k for pair in pairs]})
    return 0


def _cmd_hminus(args) -> int:
    p = _require_prime(args.p, "p")
    value = h_minus(p, precision=args.precision)
    _emit({"p": p, "h_minus": str(value)})
    return 0


def _cmd_vandiver(args) -> int:
    p = _require_prime(args.p, "p")
    try:
        witness = vandiver_witness(p, args.k, args.candidates)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = {"p": p, "k": args.k, "candidates": args.candidates}
    if witness is None:
        out["witness"] = None
        out["result"] = "inconclusive"
    else:
        out["witness"] = {"q": witness.q, "w": str(witness.w), "e": witness.e}
        out["result"] = "not-a-pth-power"
    _emit(out)
    return 0


def _cmd_scan(args) -> int:
    ctx = field_ctx(_require_prime(args.p, "p"))
    jobs = args.jobs
    if jobs is None:
        jobs = int(os.environ.get("CYCLORES_JOBS", "1"))
    try:
        result = scan(ctx, args.x, args.y, _SIGN_VALUE[args.sign],
                      args.trial_bound, jobs=jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    lines = [_dump(record_to_json(rec)) for rec in result]
    if result.unfactored_cofactor is not None:
        lines.append(_dump({
            "partial": True,
            "p": args.p,
            "x": args.x,
            "y": args.y,
            "sign": args.sign,
            "unfactored_cofactor": str(result.unfactored_cofactor),
        }))
    text = "\n".join(lines) + ("\n" if lines else "")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    failures = 0
    count = 0
    with open(args.infile, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            data = json.loads(line)
            if data.get("partial"):
                _emit({"skipped_partial": True,
                       "unfactored_cofactor": data["unfactored_cofactor"]})
                continue
            rec = record_from_json(data)
            count += 1
            cong = verify_congruences(rec)
            symid = verify_symbol_identities(rec)
            furt = furtwangler_report(rec)
            conj = conjugate_symmetry_report(rec)
            ok = cong.ok and symid.ok and furt.consistency_ok
            if not ok:
                failures += 1
            _emit({
                "q": rec.q,
                "x": rec.x,
                "y": rec.y,
                "sign": data["sign"],
                "congruences_ok": cong.ok,
                "congruence_failures": [k for k, v in cong.per_k.items() if not v],
                "symbol_identities_ok": symid.ok,
                "symbol_identity_failures": [
                    k for k, v in symid.per_k.items() if v == "fail"
                ],
                "skipped": [k for k, v in symid.per_k.items() if v == "skipped"],
                "specialization_triggered": symid.specialization is not None,
                "zeta_consistency_ok": furt.consistency_ok,
                "p2_divides_q_minus_1": furt.p2_divides,
                "display_holds": furt.display_holds,
                "conjugate_symmetric": all(v for v in conj.values() if v is not None),
            })
    _emit({"records": count, "failures": failures})
    return 0 if failures == 0 else 2


def _cmd_telescope(args) -> int:
    if args.pmax < 5:
        raise UsageError("--pmax must be at least 5")
    checked = []
    all_match = True
    for p in range(5, args.pmax + 1):
        if not is_prime(p):
            continue
        report = telescope_replay(field_ctx(p))
        checked.append(p)
        if not (report.match and report.minus_chain_zero):
            all_match = False
    _emit({"match": all_match, "pmax": args.pmax, "primes_checked": checked})
    return 0 if all_match else 2


def _cmd_barlow(args) -> int:
    try:
        report = barlow_abel_check(args.p, args.x, args.y, args.z)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit({
        "p": args.p,
        "x": args.x,
        "y": args.y,
        "z": args.z,
        "checks": [
            {"name": c.name, "holds": c.holds, "detail": c.detail}
            for c in report.checks
        ],
    })
    return 0


_HANDLERS = {
    "split": _cmd_split,
    "symbol": _cmd_symbol,
    "units": _cmd_units,
    "irregular": _cmd_irregular,
    "hminus": _cmd_hminus,
    "vandiver": _cmd_vandiver,
    "scan": _cmd_scan,
    "verify": _cmd_verify,
    "telescope": _cmd_telescope,
    "barlow": _cmd_barlow,
}


def run(argv: list[str] | None = None) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"error: bad JSON input: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
