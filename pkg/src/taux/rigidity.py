"""Support tau-rigid objects, AIR mutation and the exchange graph.

Objects of C(mod A) are handled as tuples of :class:`SignedObject`, each a
catalog id plus a shift flag.  All tests are pairwise on indecomposable
summands, read off the catalog's lazily built tables.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .catalog import CatalogError, IndecCatalog
from .reps import Rep, hom_dim, tau


class WindowError(CatalogError):
    """A computation needed a module outside a windowed catalog."""


class RigidityError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SignedObject:
    id: int
    shifted: bool = False

    def label(self, cat: IndecCatalog) -> str:
        return cat.name(self.id) + ("[1]" if self.shifted else "")

    def flip(self) -> "SignedObject":
        return SignedObject(self.id, not self.shifted)

    def unsigned(self) -> "SignedObject":
        return SignedObject(self.id, False)


Ordered = Tuple[SignedObject, ...]


def parse_object(cat: IndecCatalog, text: str) -> SignedObject:
    text = text.strip()
    if text.endswith("[1]"):
        return SignedObject(cat.lookup(text[:-3]), True)
    return SignedObject(cat.lookup(text), False)


def labels(cat: IndecCatalog, objs: Iterable[SignedObject]) -> List[str]:
    return [o.label(cat) for o in objs]


def is_tau_rigid(m: Rep) -> bool:
    return hom_dim(m, tau(m)) == 0


def is_support_tau_rigid(cat: IndecCatalog, objs: Iterable[SignedObject]) -> bool:
    objs = list(objs)
    mods = [o.id for o in objs if not o.shifted]
    shifts = [o.id for o in objs if o.shifted]
    for p in shifts:
        if not cat.entries[p].projective:
            raise RigidityError(f"{cat.name(p)}[1]: shifted summand must be projective")
    if len(set(mods)) != len(mods) or len(set(shifts)) != len(shifts):
        return False
    if any(cat.tau_hom(i, j) for i in mods for j in mods):
        return False
    return not any(cat.hom(p, m) for p in shifts for m in mods)


def is_support_tau_tilting(cat: IndecCatalog, objs: Sequence[SignedObject]) -> bool:
    return len(set(objs)) == len(objs) == cat.n and is_support_tau_rigid(cat, objs)


def candidates(cat: IndecCatalog) -> List[SignedObject]:
    """Indecomposable support tau-rigid objects available in the catalog."""
    out = [SignedObject(e.id) for e in cat if cat.is_tau_rigid(e.id)]
    out += [SignedObject(e.id, True) for e in cat if e.projective]
    return sorted(out, key=lambda o: (o.label(cat), o))


def completions(cat: IndecCatalog, rest: Sequence[SignedObject]) -> List[SignedObject]:
    """Indecomposables X with rest + X support tau-rigid and X not in rest."""
    rest = list(rest)
    if not is_support_tau_rigid(cat, rest):
        raise RigidityError("partial object is not support tau-rigid")
    have = set(rest)
    return [c for c in candidates(cat) if c not in have and is_support_tau_rigid(cat, rest + [c])]


def mutate(cat: IndecCatalog, t: Sequence[SignedObject], i: int) -> Ordered:
    """AIR mutation at position i (1-based)."""
    t = tuple(t)
    if not 1 <= i <= len(t):
        raise RigidityError(f"position {i} out of range 1..{len(t)}")
    rest = t[:i - 1] + t[i:]
    found = [c for c in completions(cat, rest) if c != t[i - 1]]
    if not found:
        if cat.closed:
            raise CatalogError("mutation found no completion in a closed catalog")
        raise WindowError("mutation leaves window")
    if len(found) > 1:
        raise AssertionError("non-unique completion: " + ", ".join(labels(cat, found)))
    return t[:i - 1] + (found[0],) + t[i:]


def transpose_ordered(t: Sequence[SignedObject], i: int) -> Ordered:
    t = tuple(t)
    if not 1 <= i < len(t):
        raise RigidityError(f"transposition {i} out of range 1..{len(t) - 1}")
    return t[:i - 1] + (t[i], t[i - 1]) + t[i + 1:]


def canonical(cat: IndecCatalog, objs: Iterable[SignedObject]) -> Ordered:
    return tuple(sorted(objs, key=lambda o: (o.label(cat), o)))


def projective_object(cat: IndecCatalog) -> Ordered:
    return tuple(SignedObject(i) for i in cat.projectives)


@dataclass
class SttiltList:
    objects: List[Ordered]  # each canonically sorted
    partial: bool

    def __len__(self):
        return len(self.objects)


def sttilt_enumerate(cat: IndecCatalog) -> SttiltList:
    """Breadth-first closure of A under mutation (unordered objects)."""
    start = canonical(cat, projective_object(cat))
    seen = {start}
    queue = deque([start])
    partial = False
    while queue:
        t = queue.popleft()
        for i in range(1, len(t) + 1):
            try:
                u = canonical(cat, mutate(cat, t, i))
            except WindowError:
                partial = True
                continue
            if u not in seen:
                seen.add(u)
                queue.append(u)
    objs = sorted(seen, key=lambda t: labels(cat, t))
    return SttiltList(objs, partial)


def ordered_sttilt(cat: IndecCatalog, base: Optional[SttiltList] = None) -> List[Ordered]:
    base = base or sttilt_enumerate(cat)
    out = {p for t in base.objects for p in permutations(t)}
    return sorted(out, key=lambda t: labels(cat, t))


@dataclass
class ExchangeGraph:
    names: Dict[Ordered, Tuple[str, ...]]
    vertices: List[Ordered]
    edges: List[Tuple[int, int, str]]  # (u, v, label) with u < v
    partial: bool

    def edge_set(self) -> set:
        """Edges as (frozenset of two vertex-name tuples, label)."""
        out = set()
        for u, v, lab in self.edges:
            out.add((frozenset((self.names[self.vertices[u]], self.names[self.vertices[v]])), lab))
        return out

    def to_json(self) -> dict:
        adj = {}
        for k, t in enumerate(self.vertices):
            adj[",".join(self.names[t])] = []
        for u, v, lab in self.edges:
            a, b = (",".join(self.names[self.vertices[x]]) for x in (u, v))
            adj[a].append({"label": lab, "to": b})
            adj[b].append({"label": lab, "to": a})
        return {"partial": self.partial, "vertices": [list(self.names[t]) for t in self.vertices],
                "adjacency": adj}

    def to_dot(self) -> str:
        lines = ["graph exchange {"]
        for k, t in enumerate(self.vertices):
            lines.append(f'  v{k} [label="{", ".join(self.names[t])}"];')
        for u, v, lab in self.edges:
            lines.append(f'  v{u} -- v{v} [label="{lab}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def exchange_graph(cat: IndecCatalog, depth: Optional[int] = None) -> ExchangeGraph:
    """Ordered objects reachable from the orderings of A by mu_i and pi_i.

    ``depth`` bounds the number of moves; None means until closure (or the
    window edge).
    """
    starts = sorted(set(permutations(projective_object(cat))), key=lambda t: labels(cat, t))
    dist = {t: 0 for t in starts}
    queue = deque(starts)
    raw = set()
    partial = False
    n = cat.n
    while queue:
        t = queue.popleft()
        if depth is not None and dist[t] >= depth:
            partial = True
            continue
        moves = []
        for i in range(1, n + 1):
            try:
                moves.append((mutate(cat, t, i), f"mu{i}"))
            except WindowError:
                partial = True
        for i in range(1, n):
            moves.append((transpose_ordered(t, i), f"pi{i}"))
        for u, lab in moves:
            if u not in dist:
                dist[u] = dist[t] + 1
                queue.append(u)
            raw.add((frozenset((t, u)), lab))
    names = {t: tuple(labels(cat, t)) for t in dist}
    verts = sorted(dist, key=lambda t: names[t])
    index = {t: k for k, t in enumerate(verts)}
    edges = []
    for pair, lab in raw:
        a, b = sorted(pair, key=lambda t: index[t])
        edges.append((index[a], index[b], lab))
    edges.sort(key=lambda e: (e[0], e[1], e[2]))
    return ExchangeGraph(names, verts, edges, partial)


def dumps_graph(g: ExchangeGraph) -> str:
    return json.dumps(g.to_json(), indent=2, ensure_ascii=False)
