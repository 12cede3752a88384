"""Command line front end: ``qbrauer <subcommand> --N .. --ell ..``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import branching, labels, lattice, molev, qarith, towers
from .partitions import Partition

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    N: int
    ell: int
    n: int | None = None
    n_cap: int = 40
    tol: float = 1e-8
    format: str = "text"

    def __post_init__(self):
        if not 1 < abs(self.N) < self.ell:
            raise ConfigError(f"need 1 < |N| < ell, got N={self.N}, ell={self.ell}")
        if not 0 < self.tol <= 1e-3:
            raise ConfigError("tol must lie in (0, 1e-3]")
        if self.n is not None and self.n < 0:
            raise ConfigError("n must be nonnegative")

    @property
    def context(self) -> qarith.RootOfUnityContext:
        return qarith.RootOfUnityContext(self.N, self.ell)


def fmt(x: float) -> str:
    return f"{x:.9g}"


def _round(obj):
    """Floats to 9 significant digits, recursively."""
    if isinstance(obj, float):
        return float(fmt(obj))
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    return obj


def _emit(out, data, kind: str):
    if kind == "json":
        out.write(json.dumps(_round(data), indent=2, ensure_ascii=False) + "\n")
    elif kind == "csv":
        rows = data if isinstance(data, list) else [data]
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0].keys()) if rows else [])
        w.writeheader()
        for r in rows:
            w.writerow({k: (fmt(v) if isinstance(v, float) else v) for k, v in r.items()})
        out.write(buf.getvalue())
    else:
        rows = _round(data if isinstance(data, list) else [data])
        for r in rows:
            out.write("  ".join(f"{k}={fmt(v) if isinstance(v, float) else v}" for k, v in r.items()) + "\n")


# --- subcommands ------------------------------------------------------------------------


def cmd_labels(cfg: RunConfig, args, out) -> int:
    ctx = cfg.context
    n = 0 if cfg.n is None else cfg.n
    rows = []
    if args.kind in ("hecke", "both"):
        rows += [{"kind": "hecke", "label": list(m), "size": m.size, "boundary": False} for m in labels.hecke_labels(ctx, n)]
    if args.kind in ("brauer", "both"):
        rows += [dict(kind="brauer", **r) for r in labels.brauer_labels(ctx, n).as_dicts()]
    _emit(out, rows, cfg.format)
    return EXIT_OK


def cmd_weights(cfg: RunConfig, args, out) -> int:
    ctx = cfg.context
    n = 0 if cfg.n is None else cfg.n
    rows = []
    if args.kind in ("hecke", "both"):
        for lam in labels.hecke_labels(ctx, n):
            rows.append({"kind": "hecke", "label": list(lam), "weight": qarith.hecke_weight(ctx, lam)})
    if args.kind in ("brauer", "both"):
        for lam in labels.brauer_labels(ctx, n):
            rows.append({"kind": "brauer", "label": list(lam), "weight": qarith.brauer_weight(ctx, lam)})
    if args.positivity:
        rows = [qarith.positivity_report(ctx).as_dict()]
    _emit(out, rows, cfg.format)
    return EXIT_OK


def cmd_branch(cfg: RunConfig, args, out) -> int:
    ctx = cfg.context
    lam = Partition.parse(args.lam)
    tables = []
    if args.method in ("direct", "both"):
        tables.append(branching.fusion_branch_direct(ctx, lam))
    if args.method in ("folded", "both"):
        tables.append(branching.fusion_branch_folded(ctx, lam))
    data = [t.as_dict() for t in tables]
    if cfg.format == "json":
        _emit(out, data if len(data) > 1 else data[0], "json")
    else:
        rows = [{"method": t.method, "mu": list(m), "b": v} for t in tables for m, v in t.items()]
        _emit(out, rows, cfg.format)
    if len(tables) == 2 and tables[0] != tables[1]:
        out.write("methods disagree\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_graph(cfg: RunConfig, args, out) -> int:
    ctx = cfg.context
    if cfg.n is not None:
        g = towers.inclusion_graph(ctx, cfg.n)
    else:
        g = towers.principal_graph(ctx, cfg.n_cap)
    if cfg.format == "dot":
        out.write(g.to_dot())
    elif cfg.format == "json":
        _emit(out, g.as_json(), "json")
    else:
        data = g.as_json()
        out.write(f"n={g.n} n_stable={g.n_stable} index={fmt(data['index'])} dynkin={towers.identify_dynkin(g)}\n")
        for i, j, v in data["edges"]:
            out.write(f"{list(g.even[i])} -- {list(g.odd[j])}" + (f" x{v}" if v > 1 else "") + "\n")
    return EXIT_OK


def cmd_index(cfg: RunConfig, args, out) -> int:
    ctx = cfg.context
    ratio = towers.index_ratio(ctx, cfg.n_cap)
    closed = towers.index_closed_form(ctx)
    diff = abs(ratio - closed)
    _emit(out, {"ratio": ratio, "closed_form": closed, "difference": diff}, cfg.format)
    return EXIT_OK if diff / closed < cfg.tol else EXIT_FAIL


def cmd_bratteli(cfg: RunConfig, args, out) -> int:
    ctx = cfg.context
    n_max = 4 if cfg.n is None else cfg.n
    d = towers.build_bratteli(ctx, args.kind, n_max)
    rows = [
        {"level": n, "label": list(lam), "paths": d.paths[n][lam]}
        for n in range(n_max + 1)
        for lam in d.levels[n]
    ]
    _emit(out, rows, cfg.format)
    return EXIT_OK


# --- verify -------------------------------------------------------------------------


def _smatrix_pair(ctx):
    k, ell = ctx.k, ctx.ell
    if ctx.N > 0 and ctx.N % 2:
        return lattice.LatticePair(lattice.lattice("Z", k, Fraction(1, ell)), lattice.lattice("Z", k)), "epsilon"
    if ctx.N > 0:
        return lattice.LatticePair(lattice.lattice("P", k, Fraction(1, ell)), lattice.lattice("Q", k)), "epsilon_tilde"
    return lattice.LatticePair(lattice.lattice("P", k, Fraction(1, ell)), lattice.lattice("Q", k)), "epsilon"


def _check_molev(cfg, ctx):
    if ctx.N < 0:
        return True, {"skipped": "tensor representation needs N > 0"}
    n = 4 if ctx.N**4 <= molev.MAX_DIM else 3
    rep = molev.verify_context(ctx, n, min(cfg.tol, 1e-10))
    return rep.passed, {"n": n, "worst": rep.worst, "failing": rep.failing}


def _check_smatrix(cfg, ctx):
    pair, sign = _smatrix_pair(ctx)
    if pair.index * 2**ctx.k * 6 > 200000:
        return True, {"skipped": f"index {pair.index} too large"}
    s = lattice.s_matrix(pair, sign, tol=1.0)
    defect = s.unitarity_defect()
    return defect < 1e-9, {"size": s.matrix.shape[0], "sign": sign, "defect": defect}


def _check_squaresum(cfg, ctx):
    rep = lattice.verify_square_sums(ctx, 1e-9)
    return rep.passed, rep.as_dict()


def _check_positivity(cfg, ctx):
    pos = qarith.positivity_report(ctx)
    return pos.all_positive, pos.as_dict()


def _check_folding(cfg, ctx):
    bad = []
    for n in range((cfg.n if cfg.n is not None else 8) + 1):
        for lam in labels.hecke_labels(ctx, n):
            if branching.fusion_branch_direct(ctx, lam) != branching.fusion_branch_folded(ctx, lam):
                bad.append(list(lam))
    return not bad, {"mismatches": bad}


def _check_pf(cfg, ctx):
    g = towers.principal_graph(ctx, cfg.n_cap)
    pf = towers.pf_consistency(g)
    return pf < cfg.tol, {"residual": pf, "n": g.n}


def _check_index(cfg, ctx):
    ratio = towers.index_ratio(ctx, cfg.n_cap)
    closed = towers.index_closed_form(ctx)
    rel = abs(ratio - closed) / closed
    return rel < cfg.tol, {"ratio": ratio, "closed_form": closed, "rel_error": rel}


CHECKS = {
    "molev": _check_molev,
    "smatrix": _check_smatrix,
    "squaresum": _check_squaresum,
    "positivity": _check_positivity,
    "folding": _check_folding,
    "pf": _check_pf,
    "index": _check_index,
}


def run_checks(cfg: RunConfig, target: str = "all"):
    """Yield (name, passed, detail). A check that cannot run on the context is a failure."""
    ctx = cfg.context
    for name, fn in CHECKS.items():
        if target not in ("all", name):
            continue
        try:
            passed, detail = fn(cfg, ctx)
        except (NotImplementedError, ArithmeticError, RuntimeError) as exc:
            passed, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
        yield name, bool(passed), detail


def cmd_verify(cfg: RunConfig, args, out) -> int:
    results = []
    ok = True
    for name, passed, detail in run_checks(cfg, args.target):
        ok &= bool(passed)
        results.append({"check": name, "passed": bool(passed), "detail": detail})
        if cfg.format != "json":
            out.write(f"{'PASS' if passed else 'FAIL'} {name} {json.dumps(_round(detail), ensure_ascii=False)}\n")
    if cfg.format == "json":
        _emit(out, {"passed": ok, "checks": results}, "json")
    return EXIT_OK if ok else EXIT_FAIL


# --- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qbrauer", description="Invariants of Hecke/q-Brauer quotient inclusions at roots of unity.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json", "csv"), default="text"):
        sp.add_argument("--N", type=int, required=True)
        sp.add_argument("--ell", type=int, required=True)
        sp.add_argument("--n", type=int, default=None)
        sp.add_argument("--n-cap", type=int, default=40)
        sp.add_argument("--tol", type=float, default=1e-8)
        sp.add_argument("--format", choices=formats, default=default)

    sp = sub.add_parser("labels", help="label sets with boundary flags")
    common(sp, default="json")
    sp.add_argument("--kind", choices=("hecke", "brauer", "both"), default="both")
    sp.set_defaults(func=cmd_labels)

    sp = sub.add_parser("weights", help="trace weights of the labels at level n")
    common(sp)
    sp.add_argument("--kind", choices=("hecke", "brauer", "both"), default="both")
    sp.add_argument("--positivity", action="store_true", help="report the sign check over all Brauer labels instead")
    sp.set_defaults(func=cmd_weights)

    sp = sub.add_parser("branch", help="restriction multiplicities of one Hecke label")
    common(sp, default="json")
    sp.add_argument("--lambda", dest="lam", required=True, help='e.g. "4 2"')
    sp.add_argument("--method", choices=("direct", "folded", "both"), default="both")
    sp.set_defaults(func=cmd_branch)

    sp = sub.add_parser("graph", help="principal graph (or the inclusion graph at --n)")
    common(sp, formats=("text", "json", "dot"), default="dot")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("index", help="index by ratio and by closed form")
    common(sp)
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("bratteli", help="Bratteli diagram up to level --n")
    common(sp)
    sp.add_argument("--kind", choices=("hecke", "brauer"), default="brauer")
    sp.set_defaults(func=cmd_bratteli)

    sp = sub.add_parser("verify", help="run the verification suite")
    sp.add_argument("target", nargs="?", choices=("all", "molev", "smatrix", "squaresum"), default="all")
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(args.N, args.ell, args.n, args.n_cap, args.tol, args.format)
        return args.func(cfg, args, out)
    except (ConfigError, qarith.LabelError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except NotImplementedError as exc:
        sys.stderr.write(f"unsupported context: {exc}\n")
        return EXIT_USAGE
    except ArithmeticError as exc:
        sys.stderr.write(f"verification failure: {exc}\n")
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())
