"""Signed tau-exceptional sequences and the maps between them.

The reduction E^W_U sends an indecomposable X with X + U support tau-rigid
in W to an indecomposable support tau-rigid object of J_W(U).  For an
indecomposable U it is computed by cases, with f_U(Y) = Y / trace_U(Y):

  1. U, X modules, X not in Gen U:   E = f_U(X)
  2. U, X modules, X in Gen U:       E = P(f_U(Z))[1], Z the kernel of the
                                     minimal right add(U)-approximation of X
                                     and P( ) the Ext-projective cover in J(U)
  3. U a module, X = Q[1]:           E = f_U(Y)[1], Y = H^0 of the cone of
                                     the approximation P_U^m -> Q[1] among
                                     2-term complexes of W-projectives
  4. U = P[1]:                       E = X on modules, f_P(Q)[1] on Q[1]

F is the inverse, found by exhaustive search.  psi/phi follow the recursion
A_n = T_n, (A_1..A_{n-1}) = psi^{J(T_n)}(E_{T_n}(T_1), ..., E_{T_n}(T_{n-1})).
"""

from __future__ import annotations

import contextlib
import re
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import List, Optional, Sequence, Tuple

from .catalog import IndecCatalog
from .perp import (
    WideSubcat,
    iterated_chain,
    j_of,
    projective_in,
    rigid_candidates,
    rigid_in,
    support_rigid_in,
    tail_chain,
    whole,
)
from .reps import Rep, add_approximation, gen_member, min_right_approx, split_summands, trace_quotient, shifted_cone_top
from .rigidity import (
    Ordered,
    RigidityError,
    SignedObject,
    WindowError,
    labels,
    mutate,
    ordered_sttilt,
    transpose_ordered,
)

Seq = Tuple[SignedObject, ...]


class ConstructionError(AssertionError):
    """An E value failed its postcondition."""


_FAULT: Optional[str] = None


@contextlib.contextmanager
def inject_fault(case: str):
    """Corrupt one case of E (test harness only); postconditions are skipped."""
    global _FAULT
    if case not in ("1", "2", "3", "4"):
        raise ValueError("fault case must be one of 1..4")
    old, _FAULT = _FAULT, case
    try:
        yield
    finally:
        _FAULT = old


# -- E and F --------------------------------------------------------------

def _identify(cat: IndecCatalog, x: Rep, case: str) -> int:
    if x.is_zero():
        raise ConstructionError(f"construction postcondition failed (case {case}): zero result")
    i = cat.identify(x)
    if i is not None:
        return i
    parts = split_summands(x)
    if len(parts) > 1:
        raise ConstructionError(
            f"construction postcondition failed (case {case}): decomposable result of dims {x.dims}")
    if not cat.closed:
        raise WindowError(f"E value of dims {x.dims} lies outside window")
    raise ConstructionError(f"construction postcondition failed (case {case}): result not in catalog")


def _reduce_by(cat: IndecCatalog, u: int, y: Rep, case: str) -> int:
    return _identify(cat, trace_quotient(cat.rep(u), y)[1], case)


def _projectives_of(cat: IndecCatalog, w: WideSubcat) -> List[int]:
    return [i for i in w.sorted_members() if projective_in(cat, w, i)]


def _relative_cover(cat: IndecCatalog, target: WideSubcat, y: Rep, case: str) -> int:
    """The Ext-projective cover of y inside the target subcategory."""
    if y.is_zero():
        raise ConstructionError(f"construction postcondition failed (case {case}): zero result")
    projs = _projectives_of(cat, target)
    cover = add_approximation([cat.rep(p) for p in projs], y)
    if not cover.components and not cat.closed:
        raise WindowError("relative projective cover lies outside window")
    if len(cover.components) != 1:
        raise ConstructionError(
            f"construction postcondition failed (case {case}): cover has {len(cover.components)} summands")
    return projs[cover.components[0][0]]


def _e_raw(cat: IndecCatalog, u: SignedObject, x: SignedObject, w: WideSubcat) -> Tuple[SignedObject, str]:
    if u.shifted:
        if not x.shifted:
            return x, "4"
        if _FAULT == "4":
            return x, "4"
        return SignedObject(_reduce_by(cat, u.id, cat.rep(x.id), "4"), True), "4"
    if x.shifted:
        if _FAULT == "3":
            return SignedObject(_reduce_by(cat, u.id, cat.rep(x.id), "3"), True), "3"
        y = shifted_cone_top([cat.rep(p) for p in _projectives_of(cat, w)], cat.rep(u.id), cat.rep(x.id))
        return SignedObject(_reduce_by(cat, u.id, y, "3"), True), "3"
    ur, xr = cat.rep(u.id), cat.rep(x.id)
    if not gen_member(ur, xr):
        if _FAULT == "1":
            return x, "1"
        return SignedObject(_reduce_by(cat, u.id, xr, "1")), "1"
    z = min_right_approx(ur, xr).kernel
    if _FAULT == "2":
        return SignedObject(_reduce_by(cat, u.id, z, "2")), "2"
    y = trace_quotient(ur, z)[1]
    return SignedObject(_relative_cover(cat, j_of(cat, [u], w), y, "2"), True), "2"


def E(cat: IndecCatalog, u: Optional[SignedObject], x: SignedObject, w: WideSubcat = None) -> SignedObject:
    """E^W_u(x) for an indecomposable u (None means the empty object)."""
    if u is None:
        return x
    w = whole(cat) if w is None else w
    memo = cat.__dict__.setdefault("_E_cache", {})
    key = (u, x, w.members, w.rank)
    if _FAULT is None and key in memo:
        return memo[key]
    if x.id == u.id and x.shifted == u.shifted:
        raise RigidityError("E: argument is a summand of the reducing object")
    if not support_rigid_in(cat, w, [u, x]):
        raise RigidityError(f"E: {x.label(cat)} + {u.label(cat)} is not support tau-rigid here")
    out, case = _e_raw(cat, u, x, w)
    if _FAULT is not None:
        return out
    target = j_of(cat, [u], w)
    if out.id not in target.members or not support_rigid_in(cat, target, [out]):
        raise ConstructionError(
            f"construction postcondition failed (case {case}): "
            f"E_{u.label(cat)}({x.label(cat)}) = {out.label(cat)} is not support tau-rigid in the target")
    memo[key] = out
    return out


def E_compound(cat: IndecCatalog, us: Sequence[SignedObject], x: SignedObject,
               w: WideSubcat = None, order: Optional[Sequence[int]] = None) -> SignedObject:
    """E_U for U = u_1 + ... + u_k, reducing one summand at a time.

    With ``order`` None every reduction order is computed and required to agree.
    """
    w = whole(cat) if w is None else w
    orders = [order] if order is not None else list(permutations(range(len(us))))
    results = []
    for perm in orders:
        cur_w, cur_x = w, x
        rest = [us[k] for k in perm]
        while rest:
            head, rest = rest[0], rest[1:]
            nxt = j_of(cat, [head], cur_w)
            rest = [E(cat, head, r, cur_w) for r in rest]
            cur_x = E(cat, head, cur_x, cur_w)
            cur_w = nxt
        results.append(cur_x)
    if len(set(results)) != 1:
        raise AssertionError("reduction order changed E: " + ", ".join(r.label(cat) for r in results))
    return results[0]


def F(cat: IndecCatalog, u: Optional[SignedObject], y: SignedObject, w: WideSubcat = None) -> SignedObject:
    """The unique x with E^W_u(x) = y."""
    if u is None:
        return y
    w = whole(cat) if w is None else w
    memo = cat.__dict__.setdefault("_F_cache", {})
    key = (u, y, w.members, w.rank)
    if _FAULT is None and key in memo:
        return memo[key]
    hits = []
    for c in rigid_candidates(cat, w):
        if c == u or not support_rigid_in(cat, w, [u, c]):
            continue
        try:
            if E(cat, u, c, w) == y:
                hits.append(c)
        except WindowError:
            continue
    if not hits:
        if w.partial:
            raise WindowError("no preimage in window")
        raise AssertionError(f"no preimage of {y.label(cat)} under E_{u.label(cat)}")
    if len(hits) > 1:
        raise AssertionError("multiple preimages: " + ", ".join(labels(cat, hits)))
    if _FAULT is None:
        memo[key] = hits[0]
    return hits[0]


# -- psi / phi ------------------------------------------------------------

def psi(cat: IndecCatalog, t: Sequence[SignedObject], w: WideSubcat = None) -> Seq:
    t = tuple(t)
    w = whole(cat) if w is None else w
    if not t:
        return ()
    u = t[-1]
    rest = tuple(E(cat, u, x, w) for x in t[:-1])
    return psi(cat, rest, j_of(cat, [u], w)) + (u,)


def phi(cat: IndecCatalog, s: Sequence[SignedObject], w: WideSubcat = None, check: bool = True) -> Ordered:
    s = tuple(s)
    w = whole(cat) if w is None else w
    if not s:
        return ()
    u = s[-1]
    inner = phi(cat, s[:-1], j_of(cat, [u], w), check=False)
    out = tuple(F(cat, u, y, w) for y in inner) + (u,)
    if check and psi(cat, out, w) != s:
        raise AssertionError("psi(phi(s)) != s")
    return out


def home_categories(cat: IndecCatalog, s: Sequence[SignedObject]) -> List[WideSubcat]:
    """[W_1, ..., W_n] where entry i of s lives in W_i (W_n = mod A)."""
    s = tuple(s)
    ws = [whole(cat)]
    for a in reversed(s[1:]):
        ws.append(j_of(cat, [a], ws[-1]))
    return ws[::-1]


def chain(cat: IndecCatalog, t: Sequence[SignedObject]) -> List[WideSubcat]:
    """W_{n-1}, ..., W_1 for an ordered object, computed two ways."""
    a = iterated_chain(cat, psi(cat, t))
    b = tail_chain(cat, t)
    if len(a) != len(b) or any(not x.same(y) for x, y in zip(a, b)):
        raise AssertionError("iterated J and J of tail sums disagree")
    return a


# -- validity -------------------------------------------------------------

def is_signed_sequence(cat: IndecCatalog, s: Sequence[SignedObject], w: WideSubcat = None,
                       complete: bool = True) -> bool:
    s = tuple(s)
    w = whole(cat) if w is None else w
    if complete and len(s) != w.rank:
        return False
    if not s:
        return True
    last = s[-1]
    if last.id not in w.members:
        return False
    ok = projective_in(cat, w, last.id) if last.shifted else rigid_in(cat, w, last.id)
    if not ok:
        return False
    return is_signed_sequence(cat, s[:-1], j_of(cat, [last], w), complete)


def is_unsigned_sequence(cat: IndecCatalog, s: Sequence[SignedObject], w: WideSubcat = None,
                         complete: bool = True) -> bool:
    return all(not o.shifted for o in s) and is_signed_sequence(cat, s, w, complete)


def forget_signs(s: Sequence[SignedObject]) -> Seq:
    return tuple(o.unsigned() for o in s)


# -- actions --------------------------------------------------------------

def transpose(cat: IndecCatalog, s: Sequence[SignedObject], i: int) -> Seq:
    """The induced transposition at positions i, i+1 (1-based)."""
    s = tuple(s)
    if not 1 <= i < len(s):
        raise RigidityError(f"transposition {i} out of range 1..{len(s) - 1}")
    w = home_categories(cat, s)[i]  # home of A_{i+1}
    b = F(cat, s[i], s[i - 1], w)
    c = E(cat, b, s[i], w)
    return s[:i - 1] + (c, b) + s[i + 1:]


def mutate_seq(cat: IndecCatalog, s: Sequence[SignedObject], j: int) -> Seq:
    s = tuple(s)
    if not 1 <= j <= len(s):
        raise RigidityError(f"position {j} out of range 1..{len(s)}")
    for k in range(j - 1, 0, -1):
        s = transpose(cat, s, k)
    s = (s[0].flip(),) + s[1:]
    for k in range(1, j):
        s = transpose(cat, s, k)
    return s


_GEN = re.compile(r"^(pi|p|mu|m|s)_?(\d+)$")


def parse_word(word) -> List[Tuple[str, int]]:
    """'m1 p1 mu_2' or ['pi_1', 'mu_2'] -> [('mu', 1), ('pi', 1), ('mu', 2)]."""
    toks = word.replace(",", " ").split() if isinstance(word, str) else list(word)
    out = []
    for tok in toks:
        m = _GEN.match(tok.strip().lower())
        if not m:
            raise ValueError(f"bad generator {tok!r}")
        kind = "pi" if m.group(1) in ("pi", "p") else "mu"
        out.append((kind, int(m.group(2))))
    return out


def act_word(cat: IndecCatalog, s: Sequence[SignedObject], word) -> Seq:
    """Apply generators left to right on a sequence."""
    s = tuple(s)
    for kind, i in parse_word(word):
        s = transpose(cat, s, i) if kind == "pi" else mutate_seq(cat, s, i)
    return s


def act_word_ordered(cat: IndecCatalog, t: Sequence[SignedObject], word) -> Ordered:
    t = tuple(t)
    for kind, i in parse_word(word):
        t = transpose_ordered(t, i) if kind == "pi" else mutate(cat, t, i)
    return t


# -- enumeration and the uniqueness probe ----------------------------------

@dataclass
class SequenceTable:
    pairs: List[Tuple[Ordered, Seq]]  # (ordered object, psi of it)
    skipped: int = 0

    @property
    def signed(self) -> List[Seq]:
        return [s for _, s in self.pairs]

    def unsigned(self) -> List[Seq]:
        return sorted(set(forget_signs(s) for _, s in self.pairs))


def all_sequences(cat: IndecCatalog, ordered: Optional[List[Ordered]] = None) -> SequenceTable:
    ordered = ordered_sttilt(cat) if ordered is None else ordered
    pairs, skipped = [], 0
    for t in ordered:
        try:
            pairs.append((t, psi(cat, t)))
        except WindowError:
            skipped += 1
    return SequenceTable(pairs, skipped)


@dataclass
class ProbeReport:
    sequences: int
    violations: List[Tuple[Seq, Seq, int]] = field(default_factory=list)
    skipped: int = 0
    windowed: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations


def uniqueness_probe(cat: IndecCatalog, table: Optional[SequenceTable] = None) -> ProbeReport:
    """Pairs of complete unsigned sequences differing in exactly one position."""
    table = table or all_sequences(cat)
    seqs = table.unsigned()
    viol = []
    for a, b in combinations(seqs, 2):
        diff = [k for k in range(len(a)) if a[k] != b[k]]
        if len(diff) == 1:
            viol.append((a, b, diff[0] + 1))
    return ProbeReport(len(seqs), viol, table.skipped, not cat.closed)
