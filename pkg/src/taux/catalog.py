"""Indecomposable catalogs built by knitting the Auslander-Reiten quiver."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional

from .algebra import AlgebraPresentation
from .reps import (
    Rep,
    ar_middle,
    ext1_dim,
    gen_member,
    hom_dim,
    injective,
    is_injective,
    is_projective,
    is_summand,
    iso_indecomposable,
    kernel,
    projective,
    radical_spaces,
    simple,
    socle_spaces,
    split_summands,
    subrep,
    quotient,
    tau,
    tau_inverse,
)

DEFAULT_DEPTH = 4


class CatalogError(RuntimeError):
    pass


@dataclass
class Entry:
    id: int
    rep: Rep
    name: str = ""
    aliases: tuple = ()
    level: Optional[int] = None
    colevel: Optional[int] = None
    projective: bool = False
    injective: bool = False
    tau: Optional[int] = None  # catalog id; None if zero or outside the window
    tau_inv: Optional[int] = None

    @property
    def dims(self):
        return self.rep.dims


class IndecCatalog:
    def __init__(self, algebra: AlgebraPresentation, entries: List[Entry], closed: bool, depth: int):
        self.algebra = algebra
        self.entries = entries
        self.closed = closed
        self.depth = depth
        self._by_name = {}
        for e in entries:
            for nm in (e.name,) + tuple(e.aliases):
                self._by_name.setdefault(nm, e.id)
        self._tables: Dict[str, list] = {}

    # -- basic access ---------------------------------------------------
    @property
    def flag(self) -> str:
        return "closed" if self.closed else f"windowed({self.depth})"

    @property
    def n(self) -> int:
        return self.algebra.n

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def rep(self, i: int) -> Rep:
        return self.entries[i].rep

    def name(self, i: int) -> str:
        return self.entries[i].name

    def lookup(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise CatalogError(f"no catalog entry named {name!r}") from None

    def projective_id(self, v: str) -> int:
        return self.lookup(f"P{v}")

    @property
    def projectives(self) -> List[int]:
        return [self.projective_id(v) for v in self.algebra.vertices]

    # -- identification -------------------------------------------------
    def identify(self, x: Rep) -> Optional[int]:
        for e in self.entries:
            if e.rep.dims == x.dims and iso_indecomposable(x, e.rep):
                return e.id
        return None

    def decompose(self, x: Rep) -> Counter:
        """Multiset of catalog ids of the indecomposable summands of x."""
        out = Counter()
        while not x.is_zero():
            for e in self.entries:
                split = is_summand(e.rep, x)
                if split is not None:
                    out[e.id] += 1
                    x, _ = kernel(split[1], x)
                    break
            else:
                if self.closed:
                    raise CatalogError(f"module of dims {x.dims} has no summand in a closed catalog")
                raise CatalogError("summand outside window")
        return out

    # -- pairwise tables ------------------------------------------------
    def _table(self, key: str, fn) -> list:
        t = self._tables.get(key)
        if t is None:
            reps = [e.rep for e in self.entries]
            t = [[fn(a, b) for b in reps] for a in reps]
            self._tables[key] = t
        return t

    def hom(self, i: int, j: int) -> int:
        return self._table("hom", hom_dim)[i][j]

    def tau_hom(self, i: int, j: int) -> int:
        """dim Hom(entry i, tau(entry j))."""
        return self._table("tauhom", lambda a, b: hom_dim(a, tau(b)))[i][j]

    def ext(self, i: int, j: int) -> int:
        return self._table("ext", ext1_dim)[i][j]

    def gen(self, i: int, j: int) -> bool:
        """Is entry j generated by entry i?"""
        return self._table("gen", gen_member)[i][j]

    def is_tau_rigid(self, i: int) -> bool:
        return self.tau_hom(i, i) == 0

    # -- export ---------------------------------------------------------
    def to_json(self) -> dict:
        q = self.algebra.quiver
        out = []
        for e in self.entries:
            out.append({
                "id": e.id,
                "name": e.name,
                "aliases": list(e.aliases),
                "dims": list(e.dims),
                "projective": e.projective,
                "injective": e.injective,
                "tau": None if e.tau is None else self.name(e.tau),
                "tau_inverse": None if e.tau_inv is None else self.name(e.tau_inv),
                "arrows": {
                    arr.name: [[str(x) for x in row] for row in m.to_rows()]
                    for arr, m in zip(q.arrows, e.rep.maps)
                },
            })
        return {"flag": self.flag, "entries": out}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False)


def _rank_of_tops(x: Rep, top: bool) -> tuple:
    spaces = radical_spaces(x) if top else socle_spaces(x)
    return tuple(s.cols for s in spaces)


def knit(a: AlgebraPresentation, depth_cap: int = DEFAULT_DEPTH) -> IndecCatalog:
    """Enumerate indecomposables: forward from projectives, backward from injectives.

    Each module gets a level (1 + the largest level of its known predecessors
    in the AR quiver; projectives from their radical summands) when found by
    forward knitting, and dually a colevel from injectives.  Modules whose
    level would exceed ``depth_cap`` are not added and the catalog is marked
    windowed.
    """
    if depth_cap < 1:
        raise ValueError("depth_cap must be >= 1")
    entries: List[Entry] = []
    truncated = False

    def find(x: Rep) -> Optional[int]:
        for e in entries:
            if e.rep.dims == x.dims and iso_indecomposable(x, e.rep):
                return e.id
        return None

    def add(x: Rep) -> int:
        e = Entry(len(entries), x)
        e.projective = is_projective(x)
        e.injective = is_injective(x)
        entries.append(e)
        return e.id

    def summand_ids(x: Rep) -> List[int]:
        out = []
        for s in split_summands(x):
            i = find(s)
            out.append(add(s) if i is None else i)
        return out

    # projectives and injectives, with levels from radicals / socle quotients
    proj_ids = []
    for v in a.vertices:
        p = projective(a, v)
        i = find(p)
        proj_ids.append(add(p) if i is None else i)
    inj_ids = []
    for v in a.vertices:
        x = injective(a, v)
        i = find(x)
        inj_ids.append(add(x) if i is None else i)

    def proj_level(i: int, seen=()) -> int:
        e = entries[i]
        if e.level is not None:
            return e.level
        rad, _ = subrep(e.rep, radical_spaces(e.rep))
        lv = 0
        for s in split_summands(rad):
            j = find(s)
            if j is not None and entries[j].projective and j not in seen:
                lv = max(lv, 1 + proj_level(j, seen + (i,)))
        e.level = lv
        return lv

    def inj_colevel(i: int, seen=()) -> int:
        e = entries[i]
        if e.colevel is not None:
            return e.colevel
        top, _ = quotient(e.rep, socle_spaces(e.rep))
        lv = 0
        for s in split_summands(top):
            j = find(s)
            if j is not None and entries[j].injective and j not in seen:
                lv = max(lv, 1 + inj_colevel(j, seen + (i,)))
        e.colevel = lv
        return lv

    for i in proj_ids:
        proj_level(i)
    for i in inj_ids:
        inj_colevel(i)
    # radicals of projective-injectives start components the loop below cannot reach
    for i in sorted(set(proj_ids)):
        rad, _ = subrep(entries[i].rep, radical_spaces(entries[i].rep))
        for s in split_summands(rad):
            if find(s) is None:
                entries[add(s)].level = 0
    for i in sorted(set(inj_ids)):
        top, _ = quotient(entries[i].rep, socle_spaces(entries[i].rep))
        for s in split_summands(top):
            j = find(s)
            if j is None:
                entries[add(s)].colevel = 0

    def place(x: Rep, attr: str, value: int) -> Optional[int]:
        nonlocal truncated
        i = find(x)
        if i is not None:
            if getattr(entries[i], attr) is None and value <= depth_cap:
                setattr(entries[i], attr, value)
            return i
        if value > depth_cap:
            truncated = True
            return None
        i = add(x)
        setattr(entries[i], attr, value)
        return i

    done_fwd, done_bwd = set(), set()
    progress = True
    while progress:
        progress = False
        for e in list(entries):
            if e.level is not None and e.id not in done_fwd:
                done_fwd.add(e.id)
                progress = True
                if e.injective:
                    continue
                z = tau_inverse(e.rep)
                mid = split_summands(ar_middle(z))
                lv = []
                for s in mid:
                    j = place(s, "level", e.level + 1)
                    lv.append(e.level + 1 if j is None or entries[j].level is None else entries[j].level)
                place(z, "level", 1 + max(lv))
            if e.colevel is not None and e.id not in done_bwd:
                done_bwd.add(e.id)
                progress = True
                if e.projective:
                    continue
                z = tau(e.rep)
                mid = split_summands(ar_middle(e.rep))
                lv = []
                for s in mid:
                    j = place(s, "colevel", e.colevel + 1)
                    lv.append(e.colevel + 1 if j is None or entries[j].colevel is None else entries[j].colevel)
                place(z, "colevel", 1 + max(lv))

    for e in entries:
        if not e.projective:
            e.tau = find(tau(e.rep))
        if not e.injective:
            e.tau_inv = find(tau_inverse(e.rep))
    if not truncated:
        for e in entries:
            if (not e.projective and e.tau is None) or (not e.injective and e.tau_inv is None):
                truncated = True
    _assign_names(a, entries)
    return IndecCatalog(a, entries, closed=not truncated, depth=depth_cap)


def _assign_names(a: AlgebraPresentation, entries: List[Entry]):
    pid, iid, sid = {}, {}, {}
    for v in a.vertices:
        for table, rep in ((pid, projective(a, v)), (iid, injective(a, v)), (sid, simple(a, v))):
            for e in entries:
                if e.dims == rep.dims and iso_indecomposable(rep, e.rep):
                    table[v] = e.id
                    break
    by_id: Dict[int, List[str]] = {}
    for prefix, table in (("P", pid), ("I", iid), ("S", sid)):
        for v in a.vertices:
            if v in table:
                by_id.setdefault(table[v], []).append(f"{prefix}{v}")
    for e in entries:
        names = by_id.get(e.id, [])
        if names:
            e.name, e.aliases = names[0], tuple(names[1:])
    # tau-orbits of projectives and injectives
    for e in entries:
        if e.name:
            continue
        cur, r = e, 0
        while cur.tau is not None and r <= len(entries):
            cur, r = entries[cur.tau], r + 1
            if cur.projective:
                v = next(v for v, i in pid.items() if i == cur.id)
                e.name = f"tau^-{r}P{v}"
                break
        if e.name:
            continue
        cur, r = e, 0
        while cur.tau_inv is not None and r <= len(entries):
            cur, r = entries[cur.tau_inv], r + 1
            if cur.injective:
                v = next(v for v, i in iid.items() if i == cur.id)
                e.name = f"tau^{r}I{v}"
                break
    for e in entries:
        if not e.name:
            e.name = "X(" + ",".join(str(d) for d in e.dims) + f")#{e.id}"
