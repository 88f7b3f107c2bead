"""Quivers with admissible relations and their path-algebra quotients.

Paths are tuples of arrow names written in composition order: ``("b", "a")``
is ``b*a`` and means "apply a first".  Trivial paths are empty tuples tagged
with their vertex.

The basis is computed by rewriting: every relation's leading path (largest in
degree-lexicographic order) is rewritten into the remaining terms.  Ambiguities
are checked by the diamond lemma; a non-confluent presentation is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

DEFAULT_PATH_CAP = 64


class PresentationError(ValueError):
    """Raised for invalid quivers, non-admissible relations and rejected presentations."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple  # of Arrow

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("vertex names must be distinct")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise PresentationError("arrow names must be distinct")
        if set(names) & set(self.vertices):
            raise PresentationError("arrow and vertex names must be distinct")
        for a in self.arrows:
            if a.source not in self.vertices or a.target not in self.vertices:
                raise PresentationError(f"arrow {a.name} has an unknown endpoint")

    @classmethod
    def build(cls, vertices: Sequence[str], arrows: Iterable[Tuple[str, str, str]]) -> "Quiver":
        return cls(tuple(vertices), tuple(Arrow(n, s, t) for n, s, t in arrows))

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise PresentationError(f"unknown arrow {name!r}")

    def vertex_index(self, v: str) -> int:
        return self.vertices.index(v)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))


@dataclass(frozen=True)
class Path:
    """A path; ``arrows`` in composition order (leftmost applied last)."""

    source: str
    target: str
    arrows: tuple = ()

    def __len__(self):
        return len(self.arrows)

    def label(self) -> str:
        return "*".join(self.arrows) if self.arrows else f"e{self.source}"


@dataclass(frozen=True)
class Relation:
    terms: tuple  # of (Fraction, tuple of arrow names)

    @classmethod
    def build(cls, terms: Iterable[Tuple[object, Sequence[str]]]) -> "Relation":
        return cls(tuple((Fraction(c), tuple(p)) for c, p in terms))


def _path_of(q: Quiver, arrows: Sequence[str]) -> Path:
    if not arrows:
        raise PresentationError("relation paths must be nonempty")
    arrs = [q.arrow(n) for n in arrows]
    for left, right in zip(arrs, arrs[1:]):
        if right.target != left.source:
            raise PresentationError(f"path {'*'.join(arrows)} is not composable")
    return Path(arrs[-1].source, arrs[0].target, tuple(arrows))


def _order_key(p: tuple) -> tuple:
    return (len(p), p)


def _contains(word: tuple, sub: tuple) -> int:
    n, k = len(word), len(sub)
    for i in range(n - k + 1):
        if word[i:i + k] == sub:
            return i
    return -1


class AlgebraPresentation:
    """A finite-dimensional quotient kQ/I with a computed path basis.

    Elements are dictionaries ``{basis index: Fraction}``.
    """

    def __init__(self, quiver: Quiver, relations: Sequence[Relation], path_cap: int = DEFAULT_PATH_CAP):
        self.quiver = quiver
        self.relations = tuple(relations)
        self.path_cap = path_cap
        self._rules: List[Tuple[tuple, Dict[tuple, Fraction]]] = []
        self._validate_and_orient()
        self._check_confluence()
        self.basis: List[Path] = self._enumerate_basis()
        self._index: Dict[Tuple[str, str, tuple], int] = {
            (p.source, p.target, p.arrows): i for i, p in enumerate(self.basis)
        }
        self._between: Dict[Tuple[str, str], List[int]] = {}
        for i, p in enumerate(self.basis):
            self._between.setdefault((p.source, p.target), []).append(i)
        self._mult: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        self._opposite: Optional[AlgebraPresentation] = None

    # -- construction -------------------------------------------------
    def _validate_and_orient(self):
        q = self.quiver
        for rel in self.relations:
            if not rel.terms:
                raise PresentationError("empty relation")
            paths = [_path_of(q, p) for _, p in rel.terms]
            ends = {(p.source, p.target) for p in paths}
            if len(ends) != 1:
                raise PresentationError("relation terms must be parallel paths")
            if any(len(p) < 2 for p in paths):
                raise PresentationError("relations must only involve paths of length >= 2")
            combined: Dict[tuple, Fraction] = {}
            for c, p in rel.terms:
                combined[tuple(p)] = combined.get(tuple(p), Fraction(0)) + c
            combined = {p: c for p, c in combined.items() if c}
            if not combined:
                continue
            lead = max(combined, key=_order_key)
            lc = combined.pop(lead)
            self._rules.append((lead, {p: -c / lc for p, c in combined.items()}))

    def _reduce(self, vec: Dict[tuple, Fraction]) -> Dict[tuple, Fraction]:
        """Normal form of a linear combination of arrow words."""
        vec = {p: c for p, c in vec.items() if c}
        while True:
            hit = None
            for p in sorted(vec, key=_order_key, reverse=True):
                for lead, tail in self._rules:
                    pos = _contains(p, lead)
                    if pos >= 0:
                        hit = (p, lead, tail, pos)
                        break
                if hit:
                    break
            if hit is None:
                return vec
            p, lead, tail, pos = hit
            c = vec.pop(p)
            pre, post = p[:pos], p[pos + len(lead):]
            for t, tc in tail.items():
                w = pre + t + post
                nv = vec.get(w, Fraction(0)) + c * tc
                if nv:
                    vec[w] = nv
                else:
                    vec.pop(w, None)

    def _check_confluence(self):
        rules = self._rules
        for i, (l1, _) in enumerate(rules):
            for j, (l2, _) in enumerate(rules):
                words = []
                if i != j and _contains(l1, l2) >= 0:
                    words.append(l1)
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] == l2[:k]:
                        words.append(l1 + l2[k:])
                for w in words:
                    forms = []
                    for lead, tail in (rules[i], rules[j]):
                        pos = _contains(w, lead)
                        pre, post = w[:pos], w[pos + len(lead):]
                        one = {pre + t + post: c for t, c in tail.items()}
                        forms.append(self._reduce(one))
                    if forms[0] != forms[1]:
                        raise PresentationError(
                            "presentation rejected, supply pre-reduced relations "
                            f"(ambiguity on {'*'.join(w)})"
                        )

    def _irreducible(self, word: tuple) -> bool:
        return all(_contains(word, lead) < 0 for lead, _ in self._rules)

    def _enumerate_basis(self) -> List[Path]:
        q = self.quiver
        basis = [Path(v, v, ()) for v in q.vertices]
        layer = [Path(a.source, a.target, (a.name,)) for a in q.arrows if self._irreducible((a.name,))]
        length = 1
        while layer:
            if length > self.path_cap:
                raise PresentationError(
                    f"not verified finite-dimensional under cap {self.path_cap}"
                )
            basis.extend(layer)
            nxt = []
            for p in layer:
                for a in q.arrows:
                    if a.source == p.target:
                        w = (a.name,) + p.arrows
                        if self._irreducible(w):
                            nxt.append(Path(p.source, a.target, w))
            layer = nxt
            length += 1
        return basis

    # -- queries ------------------------------------------------------
    @property
    def vertices(self) -> tuple:
        return self.quiver.vertices

    @property
    def n(self) -> int:
        return len(self.quiver.vertices)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def paths_between(self, source: str, target: str) -> List[int]:
        return self._between.get((source, target), [])

    def index_of(self, p: Path) -> int:
        return self._index[(p.source, p.target, p.arrows)]

    def trivial(self, v: str) -> int:
        return self._index[(v, v, ())]

    def index_of_arrow(self, name: str) -> int:
        arr = self.quiver.arrow(name)
        return self._index[(arr.source, arr.target, (name,))]

    def normal_form(self, source: str, target: str, word: tuple) -> Dict[int, Fraction]:
        """Express the arrow word ``word`` (from source to target) in the basis."""
        if not word:
            return {self.trivial(source): Fraction(1)} if source == target else {}
        out = {}
        for w, c in self._reduce({tuple(word): Fraction(1)}).items():
            out[self._index[(source, target, w)]] = c
        return out

    def mult(self, i: int, j: int) -> Dict[int, Fraction]:
        """basis[i] * basis[j]: apply basis[j] first, then basis[i]."""
        key = (i, j)
        hit = self._mult.get(key)
        if hit is not None:
            return hit
        p, r = self.basis[i], self.basis[j]
        if r.target != p.source:
            out = {}
        else:
            out = self.normal_form(r.source, p.target, p.arrows + r.arrows)
        self._mult[key] = out
        return out

    def multiply(self, x: Dict[int, Fraction], y: Dict[int, Fraction]) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.mult(i, j).items():
                    out[k] = out.get(k, Fraction(0)) + a * b * c
        return {k: c for k, c in out.items() if c}

    def relation_elements(self) -> List[Tuple[str, str, Dict[tuple, Fraction]]]:
        out = []
        for rel in self.relations:
            p = _path_of(self.quiver, rel.terms[0][1])
            out.append((p.source, p.target, {tuple(w): c for c, w in rel.terms}))
        return out

    def opposite(self) -> "AlgebraPresentation":
        if self._opposite is None:
            rels = [Relation(tuple((c, tuple(reversed(p))) for c, p in r.terms)) for r in self.relations]
            op = AlgebraPresentation(self.quiver.opposite(), rels, self.path_cap)
            op._opposite = self
            self._opposite = op
        return self._opposite

    def __repr__(self) -> str:
        return f"AlgebraPresentation(vertices={list(self.vertices)}, dim={self.dim})"


def build_algebra(q: Quiver, rels: Sequence[Relation], path_cap: int = DEFAULT_PATH_CAP) -> AlgebraPresentation:
    return AlgebraPresentation(q, rels, path_cap)


def idempotent_quotient(a: AlgebraPresentation, kill: Iterable[str]) -> AlgebraPresentation:
    """Λ/ΛeΛ for e the sum of trivial paths at the killed vertices."""
    kill = set(kill)
    if not kill:
        return a
    if not kill <= set(a.vertices):
        raise PresentationError("killed vertices must belong to the quiver")
    q = a.quiver
    keep = tuple(v for v in q.vertices if v not in kill)
    arrows = tuple(x for x in q.arrows if x.source in keep and x.target in keep)
    names = {x.name for x in arrows}
    rels = []
    for r in a.relations:
        terms = tuple((c, p) for c, p in r.terms if all(n in names for n in p))
        if terms:
            rels.append(Relation(terms))
    return AlgebraPresentation(Quiver(keep, arrows), rels, a.path_cap)
