"""Command-line front end.

Exit status: 0 with a verdict, 1 on bad input, 2 for an unsupported regime,
3 when the type A oracle cannot decide.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor

from .combinatorics import (
    Bipartition,
    HeckeParams,
    Partition,
    abacus_render,
    beta_set,
    bipartitions,
    format_bipartition,
    format_partition,
    format_residue_multiset,
    partitions,
    residue_multiset,
    same_block,
)
from .decomp_inf import (
    NotRegular,
    ShapeReport,
    inf_reducible_parameter,
    parity_window,
    simples_spechts_inf,
    specht_constituents_inf,
)
from .e2 import ChainOutcome, E2Witness, SplitWitness, classify
from .parsing import ParseError, parse_bipartition, parse_partition
from .signatures import iota_s, is_dominant, signature
from .typea import CanonicalBasisOracle, canonical_basis, is_2regular
from .verdict import Outcome, Verdict

EXIT_OK, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_UNKNOWN = 0, 1, 2, 3

_REGIME = re.compile(
    r"^(?:(?P<name>inf|two)|e=(?P<e>inf|\d+))(?:(?P<generic>-generic)|:r=(?P<r>-?\d+))$"
)


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_regime(text: str, char: int = 0) -> HeckeParams:
    """``inf-generic``, ``inf:r=R``, ``two-generic``, ``two:r={0,1}`` or ``e=N[:r=R|-generic]``."""
    m = _REGIME.match(text.strip())
    if not m:
        raise UsageError(f"unrecognised regime {text!r}")
    if m["name"]:
        e = None if m["name"] == "inf" else 2
    else:
        e = None if m["e"] == "inf" else int(m["e"])
    r = None if m["generic"] else int(m["r"])
    try:
        return HeckeParams(e, r, char)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# --------------------------------------------------------------------------
# JSON rendering of witnesses

def _chain_json(chain: ChainOutcome) -> dict:
    path = chain.path
    return {
        "first_residue": chain.first_residue,
        "steps": [
            {"from": format_bipartition(b), "removed": res, "to": format_bipartition(nxt)}
            for (b, res), nxt in zip(chain.steps, path[1:])
        ],
        "end": format_bipartition(path[-1]),
        "terminal": None if chain.terminal is None else format_partition(chain.terminal),
        "side": chain.side,
    }


def witness_json(verdict: Verdict):
    w = verdict.witness
    if isinstance(w, ShapeReport):
        return {
            "kind": "shape",
            "signature": w.signs,
            "matches": w.matches,
            "a": w.a,
            "b": w.b,
            "c": w.c,
            "orientation": w.orientation,
        }
    if isinstance(w, E2Witness):
        out = {"kind": "chain", "chains": [_chain_json(c) for c in w.chains]}
        if w.terminal_chain is not None:
            out["oracle"] = {
                "partition": format_partition(w.terminal_chain.terminal),
                "verdict": w.oracle_verdict.outcome.value,
            }
        return out
    if isinstance(w, SplitWitness):
        return {"kind": "split", "first": w.first.outcome.value, "second": w.second.outcome.value}
    return None


def witness_text(verdict: Verdict) -> list[str]:
    w = verdict.witness
    if isinstance(w, ShapeReport):
        return [f"signature {w}"]
    if isinstance(w, E2Witness):
        lines = [f"chain i0={c.first_residue:+d}: {c.describe()}" for c in w.chains]
        if w.terminal_chain is not None:
            lines.append(f"oracle {format_partition(w.terminal_chain.terminal)}: {w.oracle_verdict}")
        return lines
    if isinstance(w, SplitWitness):
        return [f"first component: {w.first}", f"second component: {w.second}"]
    return []


def _exit_for(verdict: Verdict) -> int:
    if verdict.outcome is Outcome.UNSUPPORTED:
        return EXIT_UNSUPPORTED
    if verdict.outcome is Outcome.UNKNOWN:
        return EXIT_UNKNOWN
    return EXIT_OK


def _emit(args, payload: dict, text_lines: list[str]):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=False))
    else:
        print("\n".join(text_lines))


# --------------------------------------------------------------------------
# commands

def _setup(args):
    """Resolve the regime, subject and oracle shared by most commands."""
    items = list(args.items)
    regime_text = args.regime
    if len(items) == 2:
        if regime_text is not None:
            raise UsageError("regime given twice")
        regime_text = items.pop(0)
    if len(items) != 1:
        raise UsageError("expected [REGIME] SUBJECT")
    params = parse_regime(regime_text or args.default_regime, args.char)
    oracle = CanonicalBasisOracle.from_file(args.typea_table) if args.typea_table else CanonicalBasisOracle()
    return params, items[0], oracle


def _classify_payload(b: Bipartition, params: HeckeParams, oracle, args) -> tuple[Verdict, dict, list[str]]:
    verdict = classify(b, params, oracle)
    payload = {
        "subject": format_bipartition(b),
        "regime": str(params),
        "r": params.r,
        "char": params.char,
        "verdict": verdict.outcome.value,
        "reason": verdict.reason,
        "witness": None,
    }
    lines = [str(verdict)]
    if args.witness:
        payload["witness"] = witness_json(verdict)
        lines += witness_text(verdict)
        if params.e == 2 and params.r is not None:
            t = inf_reducible_parameter(b, params.r, args.window_override)
            lo, hi = parity_window(b, args.window_override)
            payload["witness"]["parity_sweep"] = {"window": [lo, hi], "first_reducible_t": t}
            lines.append(
                f"e=infinity sweep over t={params.r} mod 2 in [{lo},{hi}]: "
                + ("irreducible for all t" if t is None else f"reducible at t={t}")
            )
    return verdict, payload, lines


def cmd_classify(args) -> int:
    params, subject, oracle = _setup(args)
    b = parse_bipartition(subject)
    verdict, payload, lines = _classify_payload(b, params, oracle, args)
    _emit(args, payload, lines)
    return _exit_for(verdict)


def _inf_r(params: HeckeParams) -> int:
    if params.e is not None or params.r is None:
        raise UsageError(f"this command needs an e=infinity regime inf:r=R, got {params}")
    return params.r


def cmd_signature(args) -> int:
    params, subject, _ = _setup(args)
    r = _inf_r(params)
    b = parse_bipartition(subject)
    ctx = signature(b, r)
    dominant = is_dominant(ctx.signs)
    iota = iota_s(ctx.signs) if dominant else None
    payload = {
        "subject": format_bipartition(b),
        "regime": str(params),
        "r": r,
        "signature": ctx.signs,
        "points": list(ctx.points),
        "dominant": dominant,
        "iota": None if iota is None else list(iota.images),
    }
    lines = [ctx.signs or "(empty)"]
    lines.append(f"points {list(ctx.points)}")
    lines.append(f"dominant: {'yes' if dominant else 'no'}" + (f", iota_s = {iota}" if iota else ""))
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_constituents(args) -> int:
    params, subject, _ = _setup(args)
    r = _inf_r(params)
    b = parse_bipartition(subject)
    row = specht_constituents_inf(b, r)
    factors = [format_bipartition(f) for f in row.factors]
    _emit(args, {"subject": format_bipartition(b), "regime": str(params), "r": r, "factors": factors}, factors)
    return EXIT_OK


def cmd_simples_in(args) -> int:
    params, subject, _ = _setup(args)
    r = _inf_r(params)
    b = parse_bipartition(subject)
    try:
        spechts = [format_bipartition(x) for x in simples_spechts_inf(b, r)]
    except NotRegular as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"subject": format_bipartition(b), "regime": str(params), "r": r, "spechts": spechts}, spechts)
    return EXIT_OK


def cmd_abacus(args) -> int:
    items = list(args.items)
    if len(items) == 2:
        args.regime = items.pop(0)
    if len(items) != 1:
        raise UsageError("expected [REGIME] PARTITION or BIPARTITION")
    text = items[0]
    signs_line = None
    if "|" in text:
        params = parse_regime(args.regime or "inf:r=0", args.char)
        r = _inf_r(params)
        b = parse_bipartition(text)
        rows = [beta_set(b.first, r + args.charge), beta_set(b.second, args.charge)]
        labels = [f"B^{r + args.charge}", f"B^{args.charge}"]
        ctx = signature(b, r, args.charge)
        signs_line = dict(zip(ctx.points, ctx.signs))
    else:
        lam = parse_partition(text)
        rows = [beta_set(lam, args.charge)]
        labels = [f"B^{args.charge}"]
    if args.window:
        lo, hi = (int(x) for x in args.window.split(","))
    else:
        lo = min(B.floor for B in rows) - 3
        hi = max(B.top for B in rows) + 3
    art = abacus_render(rows, (lo, hi), labels)
    if signs_line is not None:
        width = max(len(str(m)) for m in range(lo, hi + 1))
        pad = " " * (max(len(s) for s in labels) + 1)
        art += "\n" + pad + " ".join(signs_line.get(m, " ").rjust(width) for m in range(lo, hi + 1))
    if args.format == "json":
        print(json.dumps({
            "subject": text,
            "window": [lo, hi],
            "rows": [[m for m in range(lo, hi + 1) if m in B] for B in rows],
            "charges": [B.charge for B in rows],
        }))
    else:
        print(art)
    return EXIT_OK


def cmd_blocks(args) -> int:
    params, subject, _ = _setup(args)
    if not params.supported:
        _emit(args, {"subject": subject, "regime": str(params), "verdict": "Unsupported"}, ["Unsupported"])
        return EXIT_UNSUPPORTED
    b = parse_bipartition(subject)
    label = residue_multiset(b, params)
    members = [format_bipartition(x) for x in bipartitions(b.size) if same_block(x, b, params)]
    payload = {
        "subject": format_bipartition(b),
        "regime": str(params),
        "block": format_residue_multiset(label),
        "members": members,
    }
    _emit(args, payload, [f"block {format_residue_multiset(label)}"] + members)
    return EXIT_OK


def cmd_typea(args) -> int:
    n = args.n
    if n < 0:
        raise UsageError("--n must be non-negative")
    if args.char == 2:
        raise UsageError("q = -1 is not allowed in characteristic 2")
    oracle = CanonicalBasisOracle.from_file(args.typea_table) if args.typea_table else CanonicalBasisOracle()
    basis = canonical_basis(n)
    cols = sorted(basis, reverse=True)
    rows = list(partitions(n))
    verdicts = {lam: oracle.query(lam, args.char) for lam in rows}
    if args.format == "json":
        print(json.dumps({
            "n": n,
            "char": args.char,
            "columns": [format_partition(m) for m in cols],
            "rows": [
                {
                    "partition": format_partition(lam),
                    "entries": [str(basis[m][lam]) for m in cols],
                    "at_one": [basis[m][lam].at_one() for m in cols],
                    "verdict": verdicts[lam].outcome.value,
                }
                for lam in rows
            ],
        }))
    else:
        def table(cell):
            grid = [[format_partition(lam)] + [cell(basis[m][lam]) for m in cols] + [str(verdicts[lam])] for lam in rows]
            head = [f"n={n}"] + [format_partition(m) for m in cols] + [f"char {args.char}"]
            widths = [max(len(r[k]) for r in grid + [head]) for k in range(len(head))]
            fmt = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
            return [fmt(head)] + [fmt(r) for r in grid]

        print("decomposition matrix at v (characteristic 0):")
        print("\n".join(table(lambda c: str(c) if c else ".")))
        print()
        print("decomposition matrix at v=1:")
        print("\n".join(table(lambda c: str(c.at_one()) if c else ".")))
    worst = max((_exit_for(v) for v in verdicts.values()), default=EXIT_OK)
    return worst


def cmd_batch(args) -> int:
    if args.n is None or args.n < 0:
        raise UsageError("batch needs --n N with N >= 0")
    params = parse_regime(args.regime or args.default_regime, args.char)
    if not params.supported:
        verdict = classify(Bipartition(Partition(), Partition()), params)
        _emit(args, {"regime": str(params), "verdict": verdict.outcome.value, "reason": verdict.reason}, [str(verdict)])
        return EXIT_UNSUPPORTED
    oracle = CanonicalBasisOracle.from_file(args.typea_table) if args.typea_table else CanonicalBasisOracle()
    subjects = bipartitions(args.n)

    def work(b):
        return _classify_payload(b, params, oracle, args)

    status = EXIT_OK
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        for b, (verdict, payload, lines) in zip(subjects, pool.map(work, subjects)):
            if args.format == "json":
                print(json.dumps(payload))
            else:
                print(f"{format_bipartition(b)}\t" + "\n\t".join(lines))
            status = max(status, _exit_for(verdict))
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--regime", help="inf-generic | inf:r=R | two-generic | two:r={0,1} | e=N...")
    common.add_argument("--char", type=int, default=0, help="field characteristic: 0 or a prime")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--witness", action="store_true", help="include the reduction chain or shape report")
    common.add_argument("--typea-table", metavar="PATH", help="characteristic p table, lines 'p;PARTITION;irr|red'")
    common.add_argument("--window-override", type=int, metavar="INT", help="starting half-width of the parity sweep")

    parser = _Parser(prog="spechtb", description="Irreducible Specht modules for type B Hecke algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, default_regime="two:r=0", subject=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if subject:
            p.add_argument("items", nargs="*", metavar="[REGIME] SUBJECT")
        p.set_defaults(func=func, default_regime=default_regime)
        return p

    add("classify", cmd_classify, "decide irreducibility of one Specht module")
    add("signature", cmd_signature, "r-signature of a bipartition", "inf:r=0")
    add("constituents", cmd_constituents, "composition factors at e=infinity", "inf:r=0")
    add("simples-in", cmd_simples_in, "Specht modules containing a simple at e=infinity", "inf:r=0")
    ab = add("abacus", cmd_abacus, "draw beta-sets on a one-runner abacus", "inf:r=0")
    ab.add_argument("--charge", type=int, default=0)
    ab.add_argument("--window", metavar="LO,HI", help="write --window=-5,7 when LO is negative")
    add("blocks", cmd_blocks, "block label and block members")
    ta = add("typea", cmd_typea, "type A decomposition matrix at q=-1", subject=False)
    ta.add_argument("--n", type=int, required=True)
    bt = add("batch", cmd_batch, "classify every bipartition of n", subject=False)
    bt.add_argument("--n", type=int, required=True)
    bt.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args, extras = parser.parse_known_args(argv)
        # subjects may follow flags, and "-|3" looks like an option to argparse
        stray = [x for x in extras if "|" not in x]
        if stray:
            parser.error(f"unrecognized arguments: {' '.join(stray)}")
        if extras:
            if not hasattr(args, "items"):
                parser.error(f"{args.command} takes no subject")
            args.items = [x for x in args.items if "|" not in x] + [x for x in args.items + extras if "|" in x]
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except (UsageError, ParseError, ValueError, OSError) as exc:
        print(f"spechtb: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
