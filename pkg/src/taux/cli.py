"""Command-line front end (``taux``)."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Optional, Sequence

from .catalog import CatalogError, IndecCatalog, knit
from .fileio import BUNDLED, AlgebraFileError, bundled_text, load_algebra, loads_algebra
from .rigidity import (
    RigidityError,
    WindowError,
    candidates,
    exchange_graph,
    is_support_tau_rigid,
    is_support_tau_tilting,
    labels,
    mutate,
    parse_object,
    sttilt_enumerate,
    transpose_ordered,
)
from .sequences import (
    ConstructionError,
    all_sequences,
    inject_fault,
    is_signed_sequence,
    mutate_seq,
    parse_word,
    phi,
    psi,
    transpose,
    uniqueness_probe,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    algebra: str = "gamma"
    depth: int = 4
    fmt: str = "table"
    args: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.depth < 1:
            raise InputError(f"window depth must be >= 1, got {self.depth}")
        if self.fmt not in ("table", "json", "dot"):
            raise InputError(f"unknown format {self.fmt!r}")


@lru_cache(maxsize=16)
def _bundled_catalog(name: str, depth: int) -> IndecCatalog:
    _, alg = loads_algebra(bundled_text(name), f"{name}.json")
    return knit(alg, depth)


def load_catalog(cfg: RunConfig) -> IndecCatalog:
    src = cfg.algebra
    if src in BUNDLED and not Path(src).exists():
        return _bundled_catalog(src, cfg.depth)
    _, alg = load_algebra(src)
    return knit(alg, cfg.depth)


def parse_objects(cat: IndecCatalog, text: str) -> tuple:
    """'P1,P2[1]', 'P1 P2[1]' or a JSON list of names."""
    text = text.strip()
    if text.startswith("["):
        try:
            items = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad object list: {exc.msg}") from None
    else:
        items = [t for t in text.replace(",", " ").split() if t]
    if not items:
        raise InputError("empty object list")
    try:
        return tuple(parse_object(cat, str(x)) for x in items)
    except CatalogError as exc:
        raise InputError(str(exc)) from None


def _fmt(cat, objs) -> str:
    return "(" + ", ".join(labels(cat, objs)) + ")"


def _emit(obj):
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _warn_window(cat: IndecCatalog, partial: bool, skipped: int = 0):
    if partial or skipped:
        extra = f", {skipped} objects skipped" if skipped else ""
        print(f"warning: {cat.flag} catalog, results are truncated{extra}", file=sys.stderr)


# -- commands ---------------------------------------------------------------

def cmd_catalog(cfg: RunConfig, cat: IndecCatalog) -> int:
    if cfg.fmt == "json":
        _emit(cat.to_json())
        return EXIT_OK
    print(f"catalog: {len(cat)} indecomposables, {cat.flag}")
    width = max(len(e.name) for e in cat)
    for e in cat:
        tags = "".join(t for t, on in (("P", e.projective), ("I", e.injective)) if on) or "-"
        tau = cat.name(e.tau) if e.tau is not None else ("0" if e.projective else "?")
        tinv = cat.name(e.tau_inv) if e.tau_inv is not None else ("0" if e.injective else "?")
        alias = f"  = {', '.join(e.aliases)}" if e.aliases else ""
        print(f"  {e.name:<{width}}  dims={list(e.dims)}  {tags:<2}  tau={tau}  tau^-1={tinv}{alias}")
    return EXIT_OK


def cmd_taurigid(cfg: RunConfig, cat: IndecCatalog) -> int:
    objs = cfg.args.get("objects")
    if objs:
        t = parse_objects(cat, " ".join(objs))
        try:
            rigid = is_support_tau_rigid(cat, t)
        except RigidityError as exc:
            raise InputError(str(exc)) from None
        tilting = rigid and is_support_tau_tilting(cat, t)
        if cfg.fmt == "json":
            _emit({"object": labels(cat, t), "support_tau_rigid": rigid, "support_tau_tilting": tilting})
        else:
            kind = "support tau-tilting" if tilting else "support tau-rigid" if rigid else "not support tau-rigid"
            print(f"{_fmt(cat, t)}: {kind}")
        return EXIT_OK if rigid else EXIT_FAIL
    cs = candidates(cat)
    if cfg.fmt == "json":
        _emit({"flag": cat.flag, "indecomposables": labels(cat, cs)})
    else:
        print(f"indecomposable support tau-rigid objects ({cat.flag}):")
        for c in cs:
            print(f"  {c.label(cat)}")
    return EXIT_OK


def cmd_sttilt(cfg: RunConfig, cat: IndecCatalog) -> int:
    res = sttilt_enumerate(cat)
    _warn_window(cat, res.partial)
    if cfg.fmt == "json":
        _emit({"partial": res.partial, "objects": [labels(cat, t) for t in res.objects]})
    else:
        print(f"{len(res)} support tau-tilting objects" + (" (partial)" if res.partial else ""))
        for t in res.objects:
            print("  " + " + ".join(labels(cat, t)))
    return EXIT_OK


def cmd_graph(cfg: RunConfig, cat: IndecCatalog) -> int:
    g = exchange_graph(cat, cfg.args.get("steps"))
    _warn_window(cat, g.partial)
    if cfg.args.get("dot") or cfg.fmt == "dot":
        sys.stdout.write(g.to_dot())
    elif cfg.fmt == "json":
        _emit(g.to_json())
    else:
        print(f"{len(g.vertices)} vertices, {len(g.edges)} edges" + (" (partial)" if g.partial else ""))
        for u, v, lab in g.edges:
            a, b = (", ".join(g.names[g.vertices[x]]) for x in (u, v))
            print(f"  ({a}) --{lab}-- ({b})")
    return EXIT_OK


def cmd_sequences(cfg: RunConfig, cat: IndecCatalog) -> int:
    tab = all_sequences(cat)
    _warn_window(cat, not cat.closed, tab.skipped)
    signed = [labels(cat, s) for s in sorted(set(tab.signed), key=lambda s: labels(cat, s))]
    unsigned = [labels(cat, s) for s in tab.unsigned()]
    if cfg.fmt == "json":
        out = {"unsigned": unsigned}
        if cfg.args.get("signed"):
            out["signed"] = signed
            out["psi"] = [{"object": labels(cat, t), "sequence": labels(cat, s)} for t, s in tab.pairs]
        _emit(out)
        return EXIT_OK
    if cfg.args.get("signed"):
        print(f"{len(signed)} signed sequences:")
        for t, s in tab.pairs:
            print(f"  {_fmt(cat, t)} -> {_fmt(cat, s)}")
    print(f"{len(unsigned)} unsigned sequences:")
    for s in unsigned:
        print("  (" + ", ".join(s) + ")")
    return EXIT_OK


def cmd_psi(cfg: RunConfig, cat: IndecCatalog) -> int:
    t = parse_objects(cat, " ".join(cfg.args["objects"]))
    try:
        ok = is_support_tau_tilting(cat, t)
    except RigidityError as exc:
        raise InputError(str(exc)) from None
    if not ok:
        raise InputError(f"{_fmt(cat, t)} is not an ordered support tau-tilting object")
    s = psi(cat, t)
    if cfg.fmt == "json":
        _emit({"object": labels(cat, t), "sequence": labels(cat, s)})
    else:
        print(_fmt(cat, s))
    return EXIT_OK


def cmd_phi(cfg: RunConfig, cat: IndecCatalog) -> int:
    s = parse_objects(cat, " ".join(cfg.args["objects"]))
    try:
        ok = is_signed_sequence(cat, s)
    except RigidityError as exc:
        raise InputError(str(exc)) from None
    if not ok:
        raise InputError(f"{_fmt(cat, s)} is not a complete signed tau-exceptional sequence")
    t = phi(cat, s)
    if cfg.fmt == "json":
        _emit({"sequence": labels(cat, s), "object": labels(cat, t)})
    else:
        print(_fmt(cat, t))
    return EXIT_OK


def cmd_act(cfg: RunConfig, cat: IndecCatalog) -> int:
    start = parse_objects(cat, cfg.args["start"])
    try:
        word = parse_word(cfg.args["word"])
    except ValueError as exc:
        raise InputError(str(exc)) from None
    n = cat.n
    for kind, i in word:
        if not (1 <= i < n if kind == "pi" else 1 <= i <= n):
            raise InputError(f"generator {kind}{i} out of range for rank {n}")
    mode = cfg.args.get("as", "auto")
    try:
        as_object = mode == "object" or (mode == "auto" and is_support_tau_tilting(cat, start))
        if as_object:
            if not is_support_tau_tilting(cat, start):
                raise InputError(f"{_fmt(cat, start)} is not an ordered support tau-tilting object")
            t, s = start, psi(cat, start)
        else:
            if not is_signed_sequence(cat, start):
                raise InputError(f"{_fmt(cat, start)} is neither a support tau-tilting object "
                                 "nor a signed sequence")
            t, s = phi(cat, start), start
    except RigidityError as exc:
        raise InputError(str(exc)) from None
    steps = [{"step": 0, "generator": None, "object": labels(cat, t), "sequence": labels(cat, s)}]
    status, error = EXIT_OK, None
    for k, (kind, i) in enumerate(word, 1):
        try:
            if kind == "pi":
                t, s = transpose_ordered(t, i), transpose(cat, s, i)
            else:
                t, s = mutate(cat, t, i), mutate_seq(cat, s, i)
            if psi(cat, t) != s:
                raise AssertionError(f"square does not commute at step {k}")
        except WindowError as exc:
            status, error = EXIT_FAIL, f"window exhausted at step {k} ({kind}{i}): {exc}"
            break
        except AssertionError as exc:
            status, error = EXIT_FAIL, f"step {k} ({kind}{i}): {exc}"
            break
        steps.append({"step": k, "generator": f"{kind}{i}", "object": labels(cat, t),
                      "sequence": labels(cat, s)})
    if cfg.fmt == "json":
        _emit({"trace": steps, "complete": status == EXIT_OK, "error": error})
    else:
        for st in steps:
            gen = st["generator"] or "start"
            print(f"  {st['step']:>2} {gen:<5} ({', '.join(st['object'])})  |  ({', '.join(st['sequence'])})")
        if error:
            print(f"error: {error}", file=sys.stderr)
    return status


def cmd_verify(cfg: RunConfig, cat: Optional[IndecCatalog]) -> int:
    from . import verify

    verify.clear()
    fault = cfg.args.get("fault")
    if fault:
        with inject_fault(fault):
            results = verify.run_all()
        verify.clear()
    else:
        results = verify.run_all()
    path = cfg.args.get("json_path")
    if path:
        Path(path).write_text(verify.report_json(results) + "\n", encoding="utf-8")
    if cfg.fmt == "json":
        print(verify.report_json(results))
    else:
        for r in results:
            print(f"[{'PASS' if r.passed else 'FAIL'}] {r.number:>2} {r.name}: {r.detail}")
            for f in r.failures[:5]:
                print(f"       {f.rstrip()}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_probe(cfg: RunConfig, cat: IndecCatalog) -> int:
    rep = uniqueness_probe(cat)
    _warn_window(cat, rep.windowed, rep.skipped)
    if cfg.fmt == "json":
        _emit({"sequences": rep.sequences, "skipped": rep.skipped, "windowed": rep.windowed,
               "violations": [{"first": labels(cat, a), "second": labels(cat, b), "position": p}
                              for a, b, p in rep.violations]})
    else:
        print(f"{rep.sequences} unsigned sequences, {len(rep.violations)} violations")
        for a, b, p in rep.violations:
            print(f"  {_fmt(cat, a)} vs {_fmt(cat, b)} differ only at position {p}")
    return EXIT_OK if rep.ok else EXIT_FAIL


COMMANDS = {
    "catalog": cmd_catalog,
    "taurigid": cmd_taurigid,
    "sttilt": cmd_sttilt,
    "graph": cmd_graph,
    "sequences": cmd_sequences,
    "psi": cmd_psi,
    "phi": cmd_phi,
    "act": cmd_act,
    "verify-paper": cmd_verify,
    "uniqueness-probe": cmd_probe,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", "-a", default=None,
                        help=f"algebra file, or a bundled name ({', '.join(BUNDLED)}); default gamma")
    common.add_argument("--depth", "-d", type=int, default=None,
                        help="knitting window depth (default 4, or $TAUX_WINDOW)")
    common.add_argument("--format", "-f", dest="fmt", choices=("table", "json", "dot"), default=None)

    p = argparse.ArgumentParser(prog="taux", description="tau-tilting computations over small algebras")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("catalog", parents=[common], help="list the indecomposable catalog")
    s = sub.add_parser("taurigid", parents=[common], help="list or test support tau-rigid objects")
    s.add_argument("objects", nargs="*")
    sub.add_parser("sttilt", parents=[common], help="enumerate support tau-tilting objects")
    s = sub.add_parser("graph", parents=[common], help="labelled exchange graph of ordered objects")
    s.add_argument("--dot", action="store_true")
    s.add_argument("--steps", type=int, default=None, help="bound on moves from the start")
    s = sub.add_parser("sequences", parents=[common], help="signed and unsigned tau-exceptional sequences")
    s.add_argument("--signed", action="store_true")
    s = sub.add_parser("psi", parents=[common], help="ordered object -> signed sequence")
    s.add_argument("objects", nargs="+")
    s = sub.add_parser("phi", parents=[common], help="signed sequence -> ordered object")
    s.add_argument("objects", nargs="+")
    s = sub.add_parser("act", parents=[common], help="trace a mutation-group word on both sides")
    s.add_argument("--start", required=True)
    s.add_argument("--word", required=True)
    s.add_argument("--as", dest="as_", choices=("auto", "object", "sequence"), default="auto")
    s = sub.add_parser("verify-paper", parents=[common], help="run the acceptance battery")
    s.add_argument("--json", dest="json_path", default=None)
    s.add_argument("--inject-fault", dest="fault", choices=("1", "2", "3", "4"), help=argparse.SUPPRESS)
    sub.add_parser("uniqueness-probe", parents=[common], help="sequences differing in one place")
    return p


def config_from(ns: argparse.Namespace) -> RunConfig:
    depth = ns.depth
    if depth is None:
        env = os.environ.get("TAUX_WINDOW")
        if env:
            try:
                depth = int(env)
            except ValueError:
                raise InputError(f"TAUX_WINDOW must be an integer, got {env!r}") from None
        else:
            depth = 4
    extra = {k: v for k, v in vars(ns).items() if k not in ("algebra", "depth", "fmt", "command")}
    if "as_" in extra:
        extra["as"] = extra.pop("as_")
    fmt = ns.fmt or ("dot" if extra.get("dot") else "table")
    return RunConfig(ns.algebra or "gamma", depth, fmt, extra)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = config_from(ns)
        cat = None if ns.command == "verify-paper" else load_catalog(cfg)
        return COMMANDS[ns.command](cfg, cat)
    except (InputError, AlgebraFileError, CatalogError, RigidityError) as exc:
        if isinstance(exc, WindowError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
