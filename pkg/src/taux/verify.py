"""The acceptance battery: twelve checks over the bundled algebras."""

from __future__ import annotations

import json
import traceback
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable, List, Optional, Set, Tuple

from .catalog import IndecCatalog, knit
from .fileio import bundled
from .perp import j_of, rigid_candidates, rigid_in, whole
from .rigidity import (
    SignedObject,
    exchange_graph,
    is_support_tau_rigid,
    labels,
    mutate,
    sttilt_enumerate,
    transpose_ordered,
)
from .sequences import (
    E,
    E_compound,
    act_word,
    all_sequences,
    is_signed_sequence,
    is_unsigned_sequence,
    mutate_seq,
    phi,
    psi,
    transpose,
    uniqueness_probe,
)

FINITE_BATTERY = ("gamma", "a2", "a3", "nakayama3")
KRONECKER_DEPTH = 4
PROBE_DEPTH = 3


@lru_cache(maxsize=None)
def catalog(name: str, depth: int = 4) -> IndecCatalog:
    return knit(bundled(name), depth)


@lru_cache(maxsize=None)
def sequence_table(name: str, depth: int = 4):
    return all_sequences(catalog(name, depth))


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    failures: List[str] = field(default_factory=list)


# -- independent oracles ---------------------------------------------------

def enumerate_signed(cat: IndecCatalog, w=None) -> List[tuple]:
    """All complete signed sequences, straight from the recursive definition."""
    w = whole(cat) if w is None else w
    if w.rank == 0:
        return [()]
    out = []
    for last in rigid_candidates(cat, w):
        inner = j_of(cat, [last], w)
        for head in enumerate_signed(cat, inner):
            out.append(head + (last,))
    return out


def classical_exceptional(cat: IndecCatalog) -> Set[tuple]:
    """Complete exceptional sequences by Hom/Ext vanishing (hereditary case)."""
    exc = [i for i in range(len(cat)) if cat.hom(i, i) == 1 and cat.ext(i, i) == 0]
    out = set()
    n = cat.n

    def grow(seq):
        if len(seq) == n:
            out.add(tuple(SignedObject(i) for i in seq))
            return
        for x in exc:
            if x in seq:
                continue
            # new entry goes in front: Hom(later, x) = Ext(later, x) = 0
            if all(cat.hom(y, x) == 0 and cat.ext(y, x) == 0 for y in seq):
                grow((x,) + seq)

    grow(())
    return out


def _kron_pp(r: int, v: str) -> str:
    return f"P{v}" if r == 0 else f"tau^-{r}P{v}"


def _kron_pi(r: int, v: str) -> str:
    return f"I{v}" if r == 0 else f"tau^{r}I{v}"


def kronecker_expected(cat: IndecCatalog, reach: int = 50) -> Set[frozenset]:
    """The four tilting families and three shifted objects, cut to the window."""
    names = {e.name for e in cat}
    fams = []
    for r in range(reach):
        fams.append((_kron_pp(r, "1"), _kron_pp(r, "2")))
        fams.append((_kron_pp(r, "1"), _kron_pp(r + 1, "2")))
        fams.append((_kron_pi(r, "1"), _kron_pi(r, "2")))
        fams.append((_kron_pi(r + 1, "1"), _kron_pi(r, "2")))
    out = {frozenset(f) for f in fams if all(x in names for x in f)}
    out |= {frozenset(("I1", "P2[1]")), frozenset(("P1[1]", "P2")), frozenset(("P1[1]", "P2[1]"))}
    return out


def kronecker_ladder(cat: IndecCatalog, reach: int = 50) -> Tuple[Set[tuple], Set[tuple]]:
    """Vertices and labelled edges of the infinite ladder, cut to the window."""
    names = {e.name for e in cat}
    up = [("P1", "P2")]
    up_labels = []
    r1 = r2 = 0
    for k in range(reach):
        if k % 2 == 0:
            r2 += 1
            up_labels.append("mu2")
        else:
            r1 += 1
            up_labels.append("mu1")
        up.append((_kron_pp(r1, "1"), _kron_pp(r2, "2")))
    down = [("P1", "P2"), ("P1[1]", "P2"), ("P1[1]", "P2[1]"), ("I1", "P2[1]"), ("I1", "I2")]
    down_labels = ["mu1", "mu2", "mu1", "mu2"]
    s1 = s2 = 0
    for k in range(reach):
        if k % 2 == 0:
            s1 += 1
            down_labels.append("mu1")
        else:
            s2 += 1
            down_labels.append("mu2")
        down.append((_kron_pi(s1, "1"), _kron_pi(s2, "2")))

    def ok(v):
        return all(x.endswith("[1]") or x in names for x in v)

    swap = {"mu1": "mu2", "mu2": "mu1"}
    verts, edges = set(), set()
    for column in (up, down):
        labs = up_labels if column is up else down_labels
        for a, b, lab in zip(column, column[1:], labs):
            if ok(a) and ok(b):
                edges.add((frozenset((a, b)), lab))
                edges.add((frozenset((a[::-1], b[::-1])), swap[lab]))
        for v in column:
            if ok(v):
                verts.add(v)
                verts.add(v[::-1])
                edges.add((frozenset((v, v[::-1])), "pi1"))
    return verts, edges


# -- the twelve checks -------------------------------------------------------

def _check(number: int, name: str, fn: Callable[[], Tuple[bool, str, List[str]]]) -> CheckResult:
    try:
        ok, detail, fails = fn()
    except Exception as exc:  # a crash is a failure with its own diagnostic
        return CheckResult(number, name, False, f"{type(exc).__name__}: {exc}",
                           [traceback.format_exc(limit=3)])
    return CheckResult(number, name, ok, detail, fails)


def check_gamma_list():
    cat = catalog("gamma")
    got = {tuple(labels(cat, s)) for s in sequence_table("gamma").unsigned()}
    want = {("S1", "P2"), ("S2", "P1"), ("I1", "S2"), ("P1", "S1")}
    return got == want, f"unsigned sequences {sorted(got)}", [] if got == want else [f"want {sorted(want)}"]


def check_gamma_first_term():
    cat = catalog("gamma")
    p2 = cat.lookup("P2")
    tab = sequence_table("gamma")
    bad = [labels(cat, s) for s in tab.signed if s[0].id == p2]
    bad += [labels(cat, s) for s in tab.unsigned() if s[0].id == p2]
    return not bad, f"{len(tab.signed)} signed, {len(tab.unsigned())} unsigned scanned", [str(b) for b in bad]


def check_gamma_relative():
    cat = catalog("gamma")
    m, s2 = cat.lookup("I1"), SignedObject(cat.lookup("S2"))
    w = j_of(cat, [s2])
    rel = rigid_in(cat, w, m)
    amb = cat.is_tau_rigid(m)
    return rel and not amb, f"rigid in J(S2): {rel}; tau-rigid in mod: {amb}", []


def check_kronecker_classification():
    cat = catalog("kronecker", KRONECKER_DEPTH)
    got = {frozenset(labels(cat, t)) for t in sttilt_enumerate(cat).objects}
    want = kronecker_expected(cat)
    fails = [f"missing {sorted(x)}" for x in want - got] + [f"extra {sorted(x)}" for x in got - want]
    return not fails, f"{len(got)} objects in the depth-{KRONECKER_DEPTH} window", fails


def check_exchange_ladder():
    cat = catalog("kronecker", KRONECKER_DEPTH)
    g = exchange_graph(cat)
    verts = set(g.names[v] for v in g.vertices)
    edges = g.edge_set()
    wv, we = kronecker_ladder(cat)
    fails = [f"vertex {v}" for v in verts ^ wv] + [f"edge {sorted(e[0])} {e[1]}" for e in edges ^ we]
    return not fails, f"{len(verts)} vertices, {len(edges)} edges", fails


def check_bijection():
    fails, notes = [], []
    for nm in FINITE_BATTERY:
        cat = catalog(nm)
        tab = sequence_table(nm)
        for t, s in tab.pairs:
            if phi(cat, s) != t:
                fails.append(f"{nm}: phi(psi({labels(cat, t)})) != T")
            if not is_signed_sequence(cat, s):
                fails.append(f"{nm}: psi({labels(cat, t)}) = {labels(cat, s)} is not a signed sequence")
        direct = set(enumerate_signed(cat))
        image = set(tab.signed)
        if direct != image:
            fails.append(f"{nm}: psi image differs from the directly enumerated sequences")
        if len(image) != len(tab.pairs):
            fails.append(f"{nm}: psi is not injective")
        notes.append(f"{nm}: {len(tab.pairs)}")
    g = sequence_table("gamma")
    if len(g.pairs) != 12 or len(set(g.signed)) != 12:
        fails.append(f"gamma: {len(g.pairs)} ordered objects, {len(set(g.signed))} sequences")
    return not fails, "ordered objects " + ", ".join(notes), fails


def check_actions():
    fails, count = [], 0
    for nm in FINITE_BATTERY:
        cat = catalog(nm)
        for t, s in sequence_table(nm).pairs:
            for i in range(1, cat.n):
                count += 1
                if transpose(cat, s, i) != psi(cat, transpose_ordered(t, i)):
                    fails.append(f"{nm}: pi{i} on {labels(cat, t)}")
            for i in range(1, cat.n + 1):
                count += 1
                if mutate_seq(cat, s, i) != psi(cat, mutate(cat, t, i)):
                    fails.append(f"{nm}: mu{i} on {labels(cat, t)}")
    return not fails, f"{count} commuting squares", fails


def check_group_relations():
    fails, count = [], 0
    for nm in FINITE_BATTERY:
        cat = catalog(nm)
        n = cat.n
        for s in sequence_table(nm).signed:
            for i in range(1, n):
                count += 1
                if act_word(cat, s, [f"pi{i}", f"pi{i}"]) != s:
                    fails.append(f"{nm}: pi{i}^2 on {labels(cat, s)}")
                if act_word(cat, s, [f"pi{i}", f"mu{i}", f"pi{i}"]) != act_word(cat, s, [f"mu{i + 1}"]):
                    fails.append(f"{nm}: pi{i} mu{i} pi{i} != mu{i + 1} on {labels(cat, s)}")
            for j in range(1, n + 1):
                count += 1
                if act_word(cat, s, [f"mu{j}", f"mu{j}"]) != s:
                    fails.append(f"{nm}: mu{j}^2 on {labels(cat, s)}")
            if n >= 3:
                for i in range(1, n - 1):
                    count += 1
                    if act_word(cat, s, [f"pi{i}", f"pi{i + 1}"] * 3) != s:
                        fails.append(f"{nm}: (pi{i} pi{i + 1})^3 on {labels(cat, s)}")
                for i in range(1, n):
                    for k in range(i + 2, n):
                        count += 1
                        if act_word(cat, s, [f"pi{i}", f"pi{k}"]) != act_word(cat, s, [f"pi{k}", f"pi{i}"]):
                            fails.append(f"{nm}: pi{i} pi{k} on {labels(cat, s)}")
    return not fails, f"{count} relations", fails


def compatible_pairs(cat: IndecCatalog):
    cands = rigid_candidates(cat, whole(cat))
    for a in cands:
        for b in cands:
            if a != b and a.id != b.id and is_support_tau_rigid(cat, [a, b]):
                yield a, b


def check_formulas():
    fails, na, nb = [], 0, 0
    for nm in FINITE_BATTERY:
        cat = catalog(nm)
        cands = rigid_candidates(cat, whole(cat))
        for u, v in compatible_pairs(cat):
            na += 1
            pair = f"u={u.label(cat)}, v={v.label(cat)}"
            try:
                left = j_of(cat, [E(cat, u, v)], j_of(cat, [u]))
                if not left.same(j_of(cat, [u, v])):
                    fails.append(f"{nm}: (a) fails for {pair}")
            except Exception as exc:
                fails.append(f"{nm}: (a) raised {type(exc).__name__} for {pair}: {exc}")
            if not u < v:
                continue
            for x in cands:
                if x.id in (u.id, v.id) or not is_support_tau_rigid(cat, [u, v, x]):
                    continue
                nb += 1
                where = f"({u.label(cat)}, {v.label(cat)}) on {x.label(cat)}"
                try:
                    one = E_compound(cat, [u, v], x, order=(0, 1))
                    two = E_compound(cat, [u, v], x, order=(1, 0))
                except Exception as exc:
                    fails.append(f"{nm}: (b) raised {type(exc).__name__} for {where}: {exc}")
                    continue
                if one != two:
                    fails.append(f"{nm}: (b) fails for {where}: {one.label(cat)} vs {two.label(cat)}")
    return not fails, f"{na} pairs for (a), {nb} triples for (b), {len(fails)} failures", fails


def check_uniqueness():
    fails, notes = [], []
    for nm in FINITE_BATTERY:
        rep = uniqueness_probe(catalog(nm), sequence_table(nm))
        notes.append(f"{nm}: {rep.sequences} unsigned, {len(rep.violations)} violations")
        if rep.violations:
            fails.append(f"{nm}: {rep.violations}")
    k = uniqueness_probe(catalog("kronecker", PROBE_DEPTH), sequence_table("kronecker", PROBE_DEPTH))
    notes.append(f"kronecker window {PROBE_DEPTH} (report only): {k.sequences} unsigned, "
                 f"{len(k.violations)} violations, {k.skipped} skipped")
    return not fails, "; ".join(notes), fails


def check_hereditary():
    cat = catalog("a2")
    tau_exc = set(sequence_table("a2").unsigned())
    classic = classical_exceptional(cat)
    ok = tau_exc == classic and all(is_unsigned_sequence(cat, s) for s in tau_exc)
    return ok, f"{len(tau_exc)} tau-exceptional, {len(classic)} classical", [] if ok else [
        f"tau: {[labels(cat, s) for s in sorted(tau_exc)]}", f"classical: {[labels(cat, s) for s in sorted(classic)]}"]


def check_extcond():
    cat = catalog("gamma")
    fails = []
    for x in range(len(cat)):
        lhs = cat.tau_hom(x, x) == 0
        rhs = all(cat.ext(x, z) == 0 for z in range(len(cat)) if cat.gen(x, z))
        if lhs != rhs:
            fails.append(f"{cat.name(x)}: hom(x, tau x) = 0 is {lhs}, Ext criterion is {rhs}")
    return not fails, f"{len(cat)} catalog entries", fails


CHECKS = [
    (1, "gamma sequence list", check_gamma_list),
    (2, "gamma first-term obstruction", check_gamma_first_term),
    (3, "gamma relative rigidity witness", check_gamma_relative),
    (4, "kronecker classification", check_kronecker_classification),
    (5, "kronecker exchange ladder", check_exchange_ladder),
    (6, "psi/phi bijection", check_bijection),
    (7, "action compatibility", check_actions),
    (8, "mutation group relations", check_group_relations),
    (9, "reduction formulas", check_formulas),
    (10, "uniqueness probe", check_uniqueness),
    (11, "hereditary sanity", check_hereditary),
    (12, "ext criterion on gamma", check_extcond),
]


def run_check(number: int) -> CheckResult:
    for k, name, fn in CHECKS:
        if k == number:
            return _check(k, name, fn)
    raise KeyError(number)


def run_all(only: Optional[List[int]] = None) -> List[CheckResult]:
    return [_check(k, name, fn) for k, name, fn in CHECKS if only is None or k in only]


def report_json(results: List[CheckResult]) -> str:
    return json.dumps({"passed": all(r.passed for r in results),
                       "checks": [asdict(r) for r in results]}, indent=2)


def clear():
    catalog.cache_clear()
    sequence_table.cache_clear()
