"""Command-line surface: every query, table, and sweep with stable output.

Exit codes: 0 success, 1 for a valid "false"/empty result, 2 for usage
errors, 3 when a search budget was exhausted. Output bytes depend only on
the arguments, never on the worker count; EP_WORKERS supplies the default
worker budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import product_side, sum_side, thresholds
from .core import ProductOverflow, SearchBudgetExceeded, factorize
from .partitions import disjoint_families, equal_product_families
from .product_side import (
    ChiCertificate,
    InfeasiblePadding,
    UnequalSignatures,
    WitnessPair,
    chi_from_witness,
    construct_prime_power_witness,
    construct_qu_witness,
    is_prime_power_admissible,
    is_product_admissible,
    verify_chi,
    witness_from_chi,
)


@dataclass(frozen=True)
class RunConfig:
    """Execution knobs shared by every subcommand."""

    format: str = "text"
    workers: int = 1
    node_cap: int = product_side.DEFAULT_NODE_CAP
    scan_ceiling: int = thresholds.DEFAULT_SCAN_CEILING
    cap: int = thresholds.DEFAULT_S_CAP

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.node_cap < 1 or self.scan_ceiling < 1 or self.cap < 1:
            raise ValueError("caps must be >= 1")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _bad_format(fmt: str, command: str) -> int:
    print(f"usage error: format {fmt!r} is not supported by {command!r}", file=sys.stderr)
    return 2


def _witness_payload(w: WitnessPair) -> dict:
    t = w.triple
    return {**w.to_dict(), "triple": {"s": t.s, "p": t.p, "n": t.n}}


def _cmd_f(args, cfg: RunConfig) -> int:
    rep = sum_side.compute_report(args.s, use_shortcuts=not args.no_shortcuts, workers=cfg.workers)
    if cfg.format == "json":
        print(_dump({"s": rep.s, "f": rep.f}))
    elif cfg.format == "text":
        print(rep.f)
    else:
        return _bad_format(cfg.format, "f")
    return 0


def _cmd_report(args, cfg: RunConfig) -> int:
    rep = sum_side.compute_report(args.s, use_shortcuts=not args.no_shortcuts, workers=cfg.workers)
    if cfg.format == "json":
        print(_dump(rep.to_dict()))
    elif cfg.format == "text":
        shown = ",".join(map(str, rep.F)) if rep.F else "-"
        print(f"s={rep.s} f={rep.f} F={shown}")
        for n in rep.F:
            print(f"n={n} {_dump(rep.witnesses[n].to_dict())}")
    else:
        return _bad_format(cfg.format, "report")
    return 0


def _cmd_admissible(args, cfg: RunConfig) -> int:
    ok = sum_side.is_admissible(args.s, args.p, args.n)
    if cfg.format == "json":
        print(_dump({"s": args.s, "p": args.p, "n": args.n, "admissible": ok}))
    elif cfg.format == "text":
        print("true" if ok else "false")
    else:
        return _bad_format(cfg.format, "admissible")
    return 0 if ok else 1


def _cmd_families(args, cfg: RunConfig) -> int:
    finder = disjoint_families if args.disjoint else equal_product_families
    fams = finder(args.s, args.n, args.r, workers=cfg.workers)
    if cfg.format == "json":
        print(
            _dump(
                {
                    "s": args.s,
                    "n": args.n,
                    "r": args.r,
                    "disjoint": args.disjoint,
                    "families": [fam.to_dict() for fam in fams],
                }
            )
        )
    elif cfg.format == "text":
        for fam in fams:
            print(_dump(fam.to_dict()))
    else:
        return _bad_format(cfg.format, "families")
    return 0 if fams else 1


def _cmd_product(args, cfg: RunConfig) -> int:
    witness = is_product_admissible(factorize(args.p), node_cap=cfg.node_cap)
    if cfg.format == "json":
        print(
            _dump(
                {
                    "p": args.p,
                    "admissible": witness is not None,
                    "witness": None if witness is None else _witness_payload(witness),
                }
            )
        )
    elif cfg.format == "text":
        print("none" if witness is None else _dump(_witness_payload(witness)))
    else:
        return _bad_format(cfg.format, "product")
    return 0 if witness is not None else 1


def _cmd_prime_power(args, cfg: RunConfig) -> int:
    mode = "exhaustive" if args.exhaustive else "theorem"
    ok, witness = is_prime_power_admissible(args.q, args.j, mode, node_cap=cfg.node_cap)
    if cfg.format == "json":
        print(
            _dump(
                {
                    "q": args.q,
                    "j": args.j,
                    "mode": mode,
                    "admissible": ok,
                    "witness": None if witness is None else _witness_payload(witness),
                }
            )
        )
    elif cfg.format == "text":
        print("true" if ok else "false")
        if witness is not None:
            print(_dump(_witness_payload(witness)))
    else:
        return _bad_format(cfg.format, "prime-power")
    return 0 if ok else 1


def _cmd_witness(args, cfg: RunConfig) -> int:
    if args.kind == "qj":
        threshold = 2 * args.q + 4
        if args.value < threshold:
            print(f"no witness: exponent {args.value} is below {threshold}", file=sys.stderr)
            return 1
        witness = construct_prime_power_witness(args.q, args.value)
    else:
        witness = construct_qu_witness(args.q, args.value)
    if cfg.format in ("json", "text"):
        print(_dump(_witness_payload(witness)))
    else:
        return _bad_format(cfg.format, "witness")
    return 0


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _cmd_chi(args, cfg: RunConfig) -> int:
    if cfg.format not in ("json", "text"):
        return _bad_format(cfg.format, "chi")
    data = _read_json(args.input)
    if args.action == "verify":
        ok = verify_chi(ChiCertificate.from_dict(data))
        print("true" if ok else "false")
        return 0 if ok else 1
    if args.action == "from-witness":
        cert = chi_from_witness(WitnessPair.from_dict(data))
        print(_dump(cert.to_dict()))
        return 0
    # to-witness
    try:
        witness = witness_from_chi(ChiCertificate.from_dict(data))
    except (InfeasiblePadding, UnequalSignatures) as exc:
        print(f"no witness: {exc}", file=sys.stderr)
        return 1
    print(_dump(_witness_payload(witness)))
    return 0


def _cmd_s0(args, cfg: RunConfig) -> int:
    value = thresholds.s_r_0(args.n, args.r, cfg.cap)
    if value is None:
        print(f"cap exhausted: no family found for s <= {cfg.cap}", file=sys.stderr)
        return 3
    if cfg.format == "json":
        print(_dump({"n": args.n, "r": args.r, "s0": value}))
    elif cfg.format == "text":
        print(value)
    else:
        return _bad_format(cfg.format, "s0")
    return 0


def _cmd_sstar(args, cfg: RunConfig) -> int:
    value = thresholds.s_r_star(args.n, args.r, cfg.cap, cfg.scan_ceiling)
    certified = cfg.scan_ceiling if args.n == 3 else None
    if cfg.format == "json":
        print(_dump({"n": args.n, "r": args.r, "sstar": value, "certified_up_to": certified}))
    elif cfg.format == "text":
        if certified is None:
            print(value)
        else:
            print(f"{value} (certified for s <= {certified})")
    else:
        return _bad_format(cfg.format, "sstar")
    return 0


def _cmd_table(args, cfg: RunConfig) -> int:
    if args.kind == "s0":
        records = thresholds.table_s_n0(args.n_max, cap=cfg.cap, workers=cfg.workers)
    else:
        records = thresholds.table_s_star(
            args.n_max, cap=cfg.cap, scan_ceiling=cfg.scan_ceiling, workers=cfg.workers
        )
    if cfg.format == "json":
        print(_dump([rec.to_dict() for rec in records]))
    elif cfg.format == "csv":
        print(thresholds.render_csv(records), end="")
    elif cfg.format == "bfile":
        if args.kind != "sstar":
            return _bad_format("bfile", "table s0")
        print(thresholds.render_bfile(records), end="")
    elif cfg.format == "text":
        for rec in records:
            if args.kind == "s0":
                print(f"n={rec.n} r={rec.r} s0={rec.s0}")
            elif rec.n == 3:
                print(f"n={rec.n} r={rec.r} sstar={rec.sstar} (certified for s <= {cfg.scan_ceiling})")
            else:
                print(f"n={rec.n} r={rec.r} sstar={rec.sstar}")
    else:
        return _bad_format(cfg.format, "table")
    return 0


def _cmd_conjectures(args, cfg: RunConfig) -> int:
    checks = thresholds.check_conjectures(args.n_max, cap=cfg.cap, scan_ceiling=cfg.scan_ceiling)
    if cfg.format == "json":
        print(_dump([c.to_dict() for c in checks]))
    elif cfg.format == "text":
        for c in checks:
            status = "HOLD" if c.holds else "FAIL"
            print(f"conjecture {c.conjecture} n={c.n}: {c.lhs} == {c.rhs} {status}")
    else:
        return _bad_format(cfg.format, "conjectures")
    return 0 if all(c.holds for c in checks) else 1


def _cmd_wizard(args, cfg: RunConfig) -> int:
    values = sum_side.wizard_bus_numbers(args.limit)
    if cfg.format == "json":
        print(_dump({"limit": args.limit, "bus_numbers": values}))
    elif cfg.format == "text":
        for s in values:
            print(s)
    else:
        return _bad_format(cfg.format, "wizard")
    return 0 if values else 1


_HANDLERS = {
    "f": _cmd_f,
    "report": _cmd_report,
    "admissible": _cmd_admissible,
    "families": _cmd_families,
    "product": _cmd_product,
    "prime-power": _cmd_prime_power,
    "witness": _cmd_witness,
    "chi": _cmd_chi,
    "s0": _cmd_s0,
    "sstar": _cmd_sstar,
    "table": _cmd_table,
    "conjectures": _cmd_conjectures,
    "wizard": _cmd_wizard,
}


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=["text", "json", "csv", "bfile"], default="text",
        help="output format (default: text)",
    )
    parser.add_argument(
        "--workers", type=int, default=None,
        help="parallel workers (default: EP_WORKERS or 1)",
    )
    parser.add_argument(
        "--node-cap", type=int, default=product_side.DEFAULT_NODE_CAP,
        help="node budget for exhaustive searches",
    )
    parser.add_argument(
        "--scan-ceiling", type=int, default=thresholds.DEFAULT_SCAN_CEILING,
        help="bounded-scan ceiling for the n=3 starred threshold",
    )
    parser.add_argument(
        "--cap", type=int, default=thresholds.DEFAULT_S_CAP,
        help="largest sum searched for first-family thresholds",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqprod",
        description="Equal-product partition families: queries, certificates, and threshold tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("f", help="count the lengths admitting an equal-product pair at sum s")
    p.add_argument("s", type=int)
    p.add_argument("--no-shortcuts", action="store_true", help="scan all n in [1, s]")

    p = sub.add_parser("report", help="lengths, count, and witness families at sum s")
    p.add_argument("s", type=int)
    p.add_argument("--no-shortcuts", action="store_true", help="scan all n in [1, s]")

    p = sub.add_parser("admissible", help="is (s, p, n) realized by two distinct partitions")
    p.add_argument("s", type=int)
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser("families", help="equal-product families of n-partitions of s")
    p.add_argument("s", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--r", type=int, default=2, help="minimum family size (default 2)")
    p.add_argument("--disjoint", action="store_true", help="require all r*n parts distinct")

    p = sub.add_parser("product", help="is p product-admissible; prints a witness")
    p.add_argument("p", type=int)

    p = sub.add_parser("prime-power", help="is q**j product-admissible")
    p.add_argument("q", type=int)
    p.add_argument("j", type=int)
    p.add_argument("--exhaustive", action="store_true", help="coefficient search instead of the closed criterion")

    p = sub.add_parser("witness", help="explicit witness constructions")
    p.add_argument("kind", choices=["qj", "qu"])
    p.add_argument("q", type=int)
    p.add_argument("value", type=int, help="exponent j for qj, cofactor u for qu")

    p = sub.add_parser("chi", help="certificate operations (JSON input)")
    p.add_argument("action", choices=["verify", "from-witness", "to-witness"])
    p.add_argument("input", nargs="?", default="-", help="JSON file or - for stdin")

    p = sub.add_parser("s0", help="first sum with an r-member family at length n")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)

    p = sub.add_parser("sstar", help="first sum from which every sum has an r-member family")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)

    p = sub.add_parser("table", help="threshold tables")
    p.add_argument("kind", choices=["s0", "sstar"])
    p.add_argument("n_max", type=int)

    p = sub.add_parser("conjectures", help="sweep the observed threshold identities")
    p.add_argument("n_max", type=int)

    p = sub.add_parser("wizard", help="sums with a unique (product, length) collision pair")
    p.add_argument("limit", type=int)

    for sp in sub.choices.values():
        _add_common(sp)
    return parser


def _resolve_workers(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("EP_WORKERS", "").strip()
    return int(env) if env else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(
            format=args.format,
            workers=_resolve_workers(args.workers),
            node_cap=args.node_cap,
            scan_ceiling=args.scan_ceiling,
            cap=args.cap,
        )
        return _HANDLERS[args.command](args, cfg)
    except SearchBudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except (ProductOverflow, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
