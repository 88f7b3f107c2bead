"""Tau-perpendicular subcategories, represented by their catalog members.

Relative notions inside a wide subcategory W never build the algebra whose
module category W is; they go through the Ext criterion

    Hom(Y, tau_W X) = 0  <=>  Ext^1(X, W n Gen Y) = 0,

with Gen taken in the ambient module category (W is closed under images).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence

from .catalog import IndecCatalog
from .reps import direct_sum, gen_member
from .rigidity import RigidityError, SignedObject, is_support_tau_rigid


@dataclass(frozen=True)
class WideSubcat:
    members: FrozenSet[int]
    rank: int
    partial: bool = False
    ambient: bool = False

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def sorted_members(self) -> List[int]:
        return sorted(self.members)

    def same(self, other: "WideSubcat") -> bool:
        return self.members == other.members and self.rank == other.rank


def _cache(cat: IndecCatalog, key: str) -> dict:
    store = cat.__dict__.setdefault("_perp_cache", {})
    return store.setdefault(key, {})


def whole(cat: IndecCatalog) -> WideSubcat:
    return WideSubcat(frozenset(range(len(cat))), cat.n, partial=not cat.closed, ambient=True)


def gen_ids(cat: IndecCatalog, ids: Iterable[int]) -> FrozenSet[int]:
    """Catalog entries lying in Gen of the direct sum of ``ids``."""
    key = frozenset(ids)
    memo = _cache(cat, "gen")
    hit = memo.get(key)
    if hit is not None:
        return hit
    if not key:
        out = frozenset()
    elif len(key) == 1:
        (i,) = key
        out = frozenset(j for j in range(len(cat)) if cat.gen(i, j))
    else:
        c = direct_sum([cat.rep(i) for i in sorted(key)])
        out = frozenset(j for j in range(len(cat)) if gen_member(c, cat.rep(j)))
    memo[key] = out
    return out


def ext_vanishes_on_gen(cat: IndecCatalog, w: WideSubcat, x: int, ys: Iterable[int]) -> bool:
    """Ext^1(x, W n Gen(sum ys)) = 0, i.e. Hom(sum ys, tau_W x) = 0."""
    return all(cat.ext(x, z) == 0 for z in gen_ids(cat, ys) & w.members)


def _require_member(cat: IndecCatalog, w: WideSubcat, x: int):
    if x not in w.members:
        raise RigidityError(f"{cat.name(x)} is not a member of the subcategory")


def rigid_in(cat: IndecCatalog, w: WideSubcat, x: int) -> bool:
    _require_member(cat, w, x)
    if w.ambient:
        return cat.is_tau_rigid(x)
    return ext_vanishes_on_gen(cat, w, x, [x])


def projective_in(cat: IndecCatalog, w: WideSubcat, x: int) -> bool:
    _require_member(cat, w, x)
    if w.ambient:
        return cat.entries[x].projective
    return all(cat.ext(x, z) == 0 for z in w.members)


def support_rigid_in(cat: IndecCatalog, w: WideSubcat, objs: Sequence[SignedObject]) -> bool:
    objs = list(objs)
    if w.ambient:
        return is_support_tau_rigid(cat, objs)
    if len(set(objs)) != len(objs):
        return False
    mods = [o.id for o in objs if not o.shifted]
    shifts = [o.id for o in objs if o.shifted]
    if any(i not in w.members for i in mods + shifts):
        return False
    for q in shifts:
        if not projective_in(cat, w, q):
            raise RigidityError(f"{cat.name(q)}[1]: shifted summand must be relative projective")
    if any(cat.hom(q, m) for q in shifts for m in mods):
        return False
    return all(ext_vanishes_on_gen(cat, w, m, mods) for m in mods)


def rigid_candidates(cat: IndecCatalog, w: WideSubcat) -> List[SignedObject]:
    """Indecomposable support tau-rigid objects of C(W) within the catalog."""
    mods = [SignedObject(i) for i in w.sorted_members() if rigid_in(cat, w, i)]
    shifts = [SignedObject(i, True) for i in w.sorted_members() if projective_in(cat, w, i)]
    return mods + shifts


def j_of(cat: IndecCatalog, u: Sequence[SignedObject], w: WideSubcat = None) -> WideSubcat:
    """J_W(U) for U = M + P[1] support tau-rigid in W (W defaults to mod A)."""
    w = whole(cat) if w is None else w
    u = tuple(sorted(set(u)))
    memo = _cache(cat, "j")
    key = (w.members, w.rank, u)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if not support_rigid_in(cat, w, u):
        raise RigidityError("J needs a support tau-rigid object")
    mods = [o.id for o in u if not o.shifted]
    every = [o.id for o in u]
    keep = []
    for y in w.sorted_members():
        if any(cat.hom(a, y) for a in every):
            continue
        if w.ambient:
            if any(cat.tau_hom(y, m) for m in mods):
                continue
        elif not all(ext_vanishes_on_gen(cat, w, m, [y]) for m in mods):
            continue
        keep.append(y)
    out = WideSubcat(frozenset(keep), w.rank - len(u), partial=w.partial)
    memo[key] = out
    return out


def tail_chain(cat: IndecCatalog, t: Sequence[SignedObject]) -> List[WideSubcat]:
    """[J(T_n), J(T_n + T_{n-1}), ..., J(T_n + ... + T_2)]."""
    t = tuple(t)
    return [j_of(cat, t[k:]) for k in range(len(t) - 1, 0, -1)]


def iterated_chain(cat: IndecCatalog, seq: Sequence[SignedObject]) -> List[WideSubcat]:
    """[W_{n-1}, ..., W_1] with W_{n-1} = J(A_n) and W_j = J_{W_{j+1}}(A_{j+1})."""
    seq = tuple(seq)
    out = []
    w = whole(cat)
    for a in reversed(seq[1:]):
        w = j_of(cat, [a], w)
        out.append(w)
    return out
