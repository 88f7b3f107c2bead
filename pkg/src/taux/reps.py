"""Finite-dimensional representations and the homological toolkit on them.

A representation stores one matrix per arrow (target dim x source dim).  Maps
between representations are tuples of per-vertex matrices; ``compose(f, g)``
means f after g.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import AlgebraPresentation
from .linalg import (
    QMatrix,
    block_diag,
    column_space_basis,
    complement_basis,
    hstack,
    kernel_basis,
    matrix_power,
    rank,
    solve,
    vstack,
)


class RepError(ValueError):
    """Invalid representation data or a violated operation precondition."""


class Rep:
    __slots__ = ("algebra", "dims", "maps", "_hash")

    def __init__(self, algebra: AlgebraPresentation, dims: Sequence[int], maps: Sequence[QMatrix], check: bool = True):
        self.algebra = algebra
        self.dims = tuple(dims)
        self.maps = tuple(maps)
        self._hash = None
        if check:
            self._validate()

    def _validate(self):
        a = self.algebra
        q = a.quiver
        if len(self.dims) != len(q.vertices) or any(d < 0 for d in self.dims):
            raise RepError("one nonnegative dimension per vertex required")
        if len(self.maps) != len(q.arrows):
            raise RepError("one matrix per arrow required")
        for arr, m in zip(q.arrows, self.maps):
            want = (self.dim_at(arr.target), self.dim_at(arr.source))
            if m.shape != want:
                raise RepError(f"arrow {arr.name}: matrix shape {m.shape}, expected {want}")
        for source, target, terms in a.relation_elements():
            total = QMatrix.zeros(self.dim_at(target), self.dim_at(source))
            for word, c in terms.items():
                total = total + self.eval_word(word, source).scale(c)
            if not total.is_zero():
                raise RepError("a relation does not vanish on the representation")

    # -- structure ----------------------------------------------------
    def dim_at(self, v: str) -> int:
        return self.dims[self.algebra.quiver.vertex_index(v)]

    def arrow_map(self, name: str) -> QMatrix:
        for arr, m in zip(self.algebra.quiver.arrows, self.maps):
            if arr.name == name:
                return m
        raise RepError(f"unknown arrow {name!r}")

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def eval_word(self, word: Sequence[str], source: str) -> QMatrix:
        if not word:
            return QMatrix.identity(self.dim_at(source))
        out = self.arrow_map(word[-1])
        for name in reversed(word[:-1]):
            out = self.arrow_map(name) @ out
        return out

    def eval_basis(self, i: int) -> QMatrix:
        p = self.algebra.basis[i]
        return self.eval_word(p.arrows, p.source)

    def eval_element(self, elem: Dict[int, Fraction], source: str, target: str) -> QMatrix:
        out = QMatrix.zeros(self.dim_at(target), self.dim_at(source))
        for i, c in elem.items():
            out = out + self.eval_basis(i).scale(c)
        return out

    def _key(self):
        return (id(self.algebra), self.dims, self.maps)

    def __eq__(self, other):
        return isinstance(other, Rep) and self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        return f"Rep(dims={self.dims})"


Map = Tuple[QMatrix, ...]


@dataclass(frozen=True)
class HomSpace:
    source: Rep
    target: Rep
    basis: tuple  # of Map

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combine(self, coeffs: Sequence) -> Map:
        return linear_combination(self.basis, coeffs, self.source, self.target)


def zero_rep(a: AlgebraPresentation) -> Rep:
    q = a.quiver
    return Rep(a, (0,) * len(q.vertices), [QMatrix.zeros(0, 0) for _ in q.arrows], check=False)


def zero_map(x: Rep, y: Rep) -> Map:
    return tuple(QMatrix.zeros(dy, dx) for dx, dy in zip(x.dims, y.dims))


def identity_map(x: Rep) -> Map:
    return tuple(QMatrix.identity(d) for d in x.dims)


def compose(f: Map, g: Map) -> Map:
    return tuple(a @ b for a, b in zip(f, g))


def linear_combination(maps: Sequence[Map], coeffs: Sequence, x: Rep, y: Rep) -> Map:
    out = list(zero_map(x, y))
    for m, c in zip(maps, coeffs):
        if c:
            out = [o + mv.scale(c) for o, mv in zip(out, m)]
    return tuple(out)


def map_vector(f: Map) -> list:
    return [e for m in f for e in m.entries]


def is_iso_map(f: Map) -> bool:
    return all(m.rows == m.cols and rank(m) == m.rows for m in f)


def _check_same(x: Rep, y: Rep):
    if x.algebra is not y.algebra:
        raise RepError("representations over different algebras")


def check_morphism(f: Map, x: Rep, y: Rep) -> bool:
    q = x.algebra.quiver
    for arr, xa, ya in zip(q.arrows, x.maps, y.maps):
        s, t = q.vertex_index(arr.source), q.vertex_index(arr.target)
        if (ya @ f[s]) != (f[t] @ xa):
            return False
    return True


# -- direct sums, sub- and quotient representations -------------------

def direct_sum(reps: Sequence[Rep]) -> Rep:
    if not reps:
        raise RepError("direct_sum of nothing")
    a = reps[0].algebra
    dims = [sum(r.dims[i] for r in reps) for i in range(len(a.vertices))]
    maps = [block_diag([r.maps[k] for r in reps]) for k in range(len(a.quiver.arrows))]
    return Rep(a, dims, maps, check=False)


def subrep(x: Rep, spaces: Sequence[QMatrix]) -> Tuple[Rep, Map]:
    """Subrepresentation spanned per vertex by independent columns; returns (rep, inclusion)."""
    q = x.algebra.quiver
    maps = []
    for arr, xa in zip(q.arrows, x.maps):
        s, t = q.vertex_index(arr.source), q.vertex_index(arr.target)
        img = xa @ spaces[s]
        m = solve(spaces[t], img)
        if m is None:
            raise RepError("subspaces are not closed under the arrows")
        maps.append(m)
    return Rep(x.algebra, [s.cols for s in spaces], maps, check=False), tuple(spaces)


def quotient(x: Rep, spaces: Sequence[QMatrix]) -> Tuple[Rep, Map]:
    """x modulo a subrepresentation; returns (rep, projection)."""
    q = x.algebra.quiver
    comps, projs = [], []
    for d, sp in zip(x.dims, spaces):
        comp = complement_basis(sp)
        full = hstack([sp, comp], rows=d) if d else QMatrix.zeros(0, 0)
        comps.append(comp)
        if d:
            inv = solve(full, QMatrix.identity(d))
            projs.append(inv.select_rows(range(sp.cols, d)))
        else:
            projs.append(QMatrix.zeros(0, 0))
    maps = []
    for arr, xa in zip(q.arrows, x.maps):
        s, t = q.vertex_index(arr.source), q.vertex_index(arr.target)
        maps.append(projs[t] @ xa @ comps[s])
    return Rep(x.algebra, [c.cols for c in comps], maps, check=False), tuple(projs)


def image_spaces(f: Map) -> List[QMatrix]:
    return [column_space_basis(m) for m in f]


def kernel_spaces(f: Map) -> List[QMatrix]:
    return [kernel_basis(m) for m in f]


def kernel(f: Map, x: Rep) -> Tuple[Rep, Map]:
    return subrep(x, kernel_spaces(f))


def image(f: Map, y: Rep) -> Tuple[Rep, Map]:
    return subrep(y, image_spaces(f))


def radical_spaces(x: Rep) -> List[QMatrix]:
    q = x.algebra.quiver
    out = []
    for v in q.vertices:
        ims = [m for arr, m in zip(q.arrows, x.maps) if arr.target == v]
        d = x.dim_at(v)
        out.append(column_space_basis(hstack(ims)) if ims else QMatrix.zeros(d, 0))
    return out


def top_dims(x: Rep) -> Tuple[int, ...]:
    return tuple(d - r.cols for d, r in zip(x.dims, radical_spaces(x)))


def socle_spaces(x: Rep) -> List[QMatrix]:
    q = x.algebra.quiver
    out = []
    for v in q.vertices:
        outs = [m for arr, m in zip(q.arrows, x.maps) if arr.source == v]
        d = x.dim_at(v)
        out.append(kernel_basis(vstack(outs, cols=d)) if outs else QMatrix.identity(d))
    return out


# -- projectives, injectives, duality --------------------------------

def projective(a: AlgebraPresentation, v: str) -> Rep:
    """Λe_v: at vertex j the paths from v to j, arrows acting by left composition."""
    q = a.quiver
    spaces = {j: a.paths_between(v, j) for j in q.vertices}
    dims = [len(spaces[j]) for j in q.vertices]
    maps = []
    for arr in q.arrows:
        src, tgt = spaces[arr.source], spaces[arr.target]
        xi = a.index_of_arrow(arr.name)
        rows = [[Fraction(0)] * len(src) for _ in tgt]
        pos = {b: k for k, b in enumerate(tgt)}
        for col, p in enumerate(src):
            for b, c in a.mult(xi, p).items():
                rows[pos[b]][col] += c
        maps.append(QMatrix.from_rows(rows, cols=len(src)))
    return Rep(a, dims, maps, check=False)


def dual(x: Rep) -> Rep:
    """Vector-space dual, a representation of the opposite algebra."""
    op = x.algebra.opposite()
    return Rep(op, x.dims, [m.T for m in x.maps], check=False)


def injective(a: AlgebraPresentation, v: str) -> Rep:
    """D(e_vΛ), computed as the dual of the projective of the opposite algebra."""
    return dual(projective(a.opposite(), v))


def simple(a: AlgebraPresentation, v: str) -> Rep:
    dims = [1 if w == v else 0 for w in a.vertices]
    q = a.quiver
    maps = [QMatrix.zeros(dims[q.vertex_index(arr.target)], dims[q.vertex_index(arr.source)]) for arr in q.arrows]
    return Rep(a, dims, maps, check=False)


# -- Hom ---------------------------------------------------------------

_HOM_CACHE: Dict[Tuple[Rep, Rep], HomSpace] = {}


def hom(x: Rep, y: Rep) -> HomSpace:
    _check_same(x, y)
    key = (x, y)
    hit = _HOM_CACHE.get(key)
    if hit is not None:
        return hit
    q = x.algebra.quiver
    offs, n = [], 0
    for dx, dy in zip(x.dims, y.dims):
        offs.append(n)
        n += dx * dy
    rows = []
    zero = Fraction(0)
    for arr, xa, ya in zip(q.arrows, x.maps, y.maps):
        s, t = q.vertex_index(arr.source), q.vertex_index(arr.target)
        dxs, dxt, dyt = x.dims[s], x.dims[t], y.dims[t]
        for i in range(dyt):
            for j in range(dxs):
                row = [zero] * n
                for k in range(ya.cols):
                    c = ya[i, k]
                    if c:
                        row[offs[s] + k * dxs + j] += c
                for k in range(dxt):
                    c = xa[k, j]
                    if c:
                        row[offs[t] + i * dxt + k] -= c
                if any(row):
                    rows.append(row)
    ker = kernel_basis(QMatrix.from_rows(rows, cols=n)) if rows else QMatrix.identity(n)
    basis = []
    for c in range(ker.cols):
        vec = ker.col(c)
        basis.append(tuple(
            QMatrix(dy, dx, tuple(vec[offs[i]:offs[i] + dx * dy]))
            for i, (dx, dy) in enumerate(zip(x.dims, y.dims))
        ))
    out = HomSpace(x, y, tuple(basis))
    _HOM_CACHE[key] = out
    return out


def hom_dim(x: Rep, y: Rep) -> int:
    return hom(x, y).dim


def clear_caches():
    _HOM_CACHE.clear()
    _PRES_CACHE.clear()
    _TAU_CACHE.clear()


# -- projective presentations, tau --------------------------------------

@dataclass(frozen=True)
class Presentation:
    """Minimal presentation P1 -> P0 -> x -> 0.

    ``gens0``/``gens1`` list the vertices of the indecomposable projective
    summands; ``coeffs[l][k]`` is the algebra element (a combination of paths
    from gens0[l] to gens1[k]) by which the k-th summand of P1 maps into the
    l-th summand of P0.
    """

    x: Rep
    gens0: tuple
    gens1: tuple
    coeffs: tuple
    p0: Rep
    p1: Rep
    cover: Map  # P0 -> x
    syzygy: Rep  # kernel of the cover
    syzygy_incl: Map  # syzygy -> P0
    differential: Map  # P1 -> P0


def _cover_data(x: Rep) -> Tuple[List[str], List[QMatrix]]:
    """Top generators: (vertex, vector in x_vertex) from complements of the radical."""
    verts, vecs = [], []
    for v, rad in zip(x.algebra.vertices, radical_spaces(x)):
        comp = complement_basis(rad)
        for c in range(comp.cols):
            verts.append(v)
            vecs.append(comp.select_cols([c]))
    return verts, vecs


def _map_from_projectives(a: AlgebraPresentation, verts: Sequence[str], vecs: Sequence[QMatrix], x: Rep) -> Map:
    """The map ⊕ Λe_v -> x sending each generator e_v to the given vector."""
    out = []
    for j in a.vertices:
        cols = []
        for v, m in zip(verts, vecs):
            for p in a.paths_between(v, j):
                cols.append(x.eval_basis(p) @ m)
        out.append(hstack(cols) if cols else QMatrix.zeros(x.dim_at(j), 0))
    return tuple(out)


def projective_sum(a: AlgebraPresentation, verts: Sequence[str]) -> Rep:
    if not verts:
        return zero_rep(a)
    return direct_sum([projective(a, v) for v in verts])


_PRES_CACHE: Dict[Rep, Presentation] = {}


def min_projective_presentation(x: Rep) -> Presentation:
    hit = _PRES_CACHE.get(x)
    if hit is not None:
        return hit
    a = x.algebra
    g0, v0 = _cover_data(x)
    p0 = projective_sum(a, g0)
    cover = _map_from_projectives(a, g0, v0, x)
    syz, incl = kernel(cover, p0)
    g1, v1 = _cover_data(syz)
    p1 = projective_sum(a, g1)
    diff = compose(incl, _map_from_projectives(a, g1, v1, syz)) if g1 else zero_map(p1, p0)
    # read off algebra coefficients of the differential, summand by summand
    coeffs = [[{} for _ in g1] for _ in g0]
    for k, (u, vec) in enumerate(zip(g1, v1)):
        ui = a.vertices.index(u)
        col = (incl[ui] @ vec).col(0)
        pos = 0
        for l, v in enumerate(g0):
            for p in a.paths_between(v, u):
                if col[pos]:
                    coeffs[l][k][p] = col[pos]
                pos += 1
    pres = Presentation(x, tuple(g0), tuple(g1), tuple(tuple(r) for r in coeffs),
                        p0, p1, cover, syz, incl, diff)
    _PRES_CACHE[x] = pres
    return pres


def is_projective(x: Rep) -> bool:
    return min_projective_presentation(x).syzygy.is_zero()


def _op_element(a: AlgebraPresentation, elem: Dict[int, Fraction]) -> Dict[int, Fraction]:
    op = a.opposite()
    out: Dict[int, Fraction] = {}
    for i, c in elem.items():
        p = a.basis[i]
        for j, d in op.normal_form(p.target, p.source, tuple(reversed(p.arrows))).items():
            out[j] = out.get(j, Fraction(0)) + c * d
    return {k: v for k, v in out.items() if v}


def transpose_module(x: Rep) -> Rep:
    """Tr x as a representation of the opposite algebra."""
    a = x.algebra
    op = a.opposite()
    pres = min_projective_presentation(x)
    if not pres.gens1:
        return zero_rep(op)
    target = projective_sum(op, pres.gens1)
    # Hom(P0, Λ) -> Hom(P1, Λ): right multiplication (in op) by the reversed coefficients
    spaces = []
    for j in op.vertices:
        cols = []
        for l, v in enumerate(pres.gens0):
            for lam in op.paths_between(v, j):
                col = []
                for k, u in enumerate(pres.gens1):
                    w = _op_element(a, pres.coeffs[l][k])
                    prod: Dict[int, Fraction] = {}
                    for wi, wc in w.items():
                        for b, c in op.mult(lam, wi).items():
                            prod[b] = prod.get(b, Fraction(0)) + wc * c
                    col.extend(prod.get(b, Fraction(0)) for b in op.paths_between(u, j))
                cols.append(col)
        d = target.dim_at(j)
        spaces.append(column_space_basis(QMatrix.from_cols(cols, d)) if cols else QMatrix.zeros(d, 0))
    tr, _ = quotient(target, spaces)
    return tr


_TAU_CACHE: Dict[Tuple[str, Rep], Rep] = {}


def tau(x: Rep) -> Rep:
    """Auslander-Reiten translate D Tr x."""
    key = ("tau", x)
    hit = _TAU_CACHE.get(key)
    if hit is None:
        hit = dual(transpose_module(x))
        _TAU_CACHE[key] = hit
    return hit


def tau_inverse(x: Rep) -> Rep:
    """Tr D x, computed as D tau_op D."""
    key = ("tauinv", x)
    hit = _TAU_CACHE.get(key)
    if hit is None:
        hit = dual(tau(dual(x)))
        _TAU_CACHE[key] = hit
    return hit


def is_injective(x: Rep) -> bool:
    return is_projective(dual(x))


# -- Ext, Gen, traces, approximations -----------------------------------

def ext1_dim(x: Rep, y: Rep) -> int:
    """dim Ext^1(x, y) from the minimal presentation.

    Ext^1(x, y) = coker(Hom(P0, y) -> Hom(Ωx, y)); the kernel of the
    restriction is Hom(x, y).
    """
    _check_same(x, y)
    if x.is_zero() or y.is_zero():
        return 0
    pres = min_projective_presentation(x)
    hom_p0 = sum(y.dim_at(v) for v in pres.gens0)
    return hom_dim(pres.syzygy, y) - hom_p0 + hom_dim(x, y)


def ext1_cocycles(x: Rep, y: Rep) -> Tuple[QMatrix, QMatrix, list]:
    """Cocycle/coboundary description of Ext^1(x, y).

    Returns (Z, B, layout): columns of Z span the derivations φ (one matrix
    y_t x x_s per arrow) for which the block representation [[y, φ], [0, x]]
    satisfies the relations; columns of B span the coboundaries.
    """
    a = x.algebra
    q = a.quiver
    layout, n = [], 0
    for arr in q.arrows:
        r, c = y.dim_at(arr.target), x.dim_at(arr.source)
        layout.append((arr.name, n, r, c))
        n += r * c
    slot = {name: (off, r, c) for name, off, r, c in layout}
    rows = []
    zero = Fraction(0)
    for source, target, terms in a.relation_elements():
        R, C = y.dim_at(target), x.dim_at(source)
        for i in range(R):
            for j in range(C):
                row = [zero] * n
                for word, coef in terms.items():
                    for p in range(len(word)):
                        arr = q.arrow(word[p])
                        left = y.eval_word(word[:p], arr.target)
                        right = x.eval_word(word[p + 1:], source)
                        off, r, c = slot[word[p]]
                        for k in range(r):
                            lk = left[i, k]
                            if not lk:
                                continue
                            for m in range(c):
                                rm = right[m, j]
                                if rm:
                                    row[off + k * c + m] += coef * lk * rm
                if any(row):
                    rows.append(row)
    Z = kernel_basis(QMatrix.from_rows(rows, cols=n)) if rows else QMatrix.identity(n)
    bcols = []
    for v in q.vertices:
        dy, dx = y.dim_at(v), x.dim_at(v)
        for k in range(dy):
            for m in range(dx):
                h = {w: QMatrix.zeros(y.dim_at(w), x.dim_at(w)) for w in q.vertices}
                e = [[Fraction(int(r == k and s == m)) for s in range(dx)] for r in range(dy)]
                h[v] = QMatrix.from_rows(e, cols=dx)
                vec = []
                for arr, xa, ya in zip(q.arrows, x.maps, y.maps):
                    phi = ya @ h[arr.source] - h[arr.target] @ xa
                    vec.extend(phi.entries)
                bcols.append(vec)
    B = column_space_basis(QMatrix.from_cols(bcols, n)) if bcols else QMatrix.zeros(n, 0)
    return Z, B, layout


def _stack_images(c: Rep, x: Rep) -> List[QMatrix]:
    h = hom(c, x)
    out = []
    for i, d in enumerate(x.dims):
        mats = [f[i] for f in h.basis]
        out.append(hstack(mats) if mats else QMatrix.zeros(d, 0))
    return out


def gen_member(c: Rep, x: Rep) -> bool:
    """Is x a quotient of a finite direct sum of copies of c?"""
    _check_same(c, x)
    return all(rank(m) == d for m, d in zip(_stack_images(c, x), x.dims))


def trace_spaces(c: Rep, x: Rep) -> List[QMatrix]:
    return [column_space_basis(m) if m.cols else m for m in _stack_images(c, x)]


def trace_quotient(c: Rep, x: Rep) -> Tuple[Rep, Rep]:
    """(t, f): the trace of Gen c in x and the torsion-free quotient x / t."""
    _check_same(c, x)
    sp = trace_spaces(c, x)
    t, _ = subrep(x, sp)
    f, _ = quotient(x, sp)
    return t, f


def torsion_free_part(c: Rep, x: Rep) -> Rep:
    return trace_quotient(c, x)[1]


@dataclass(frozen=True)
class Approximation:
    source: Rep
    kernel: Rep
    components: tuple  # maps c -> x, one per copy of c
    map: Map


def min_right_approx(c: Rep, x: Rep) -> Approximation:
    """Minimal right add(c)-approximation c^r -> x of a module x in Gen c."""
    if not gen_member(c, x):
        raise RepError("min_right_approx: target is not generated by the source")
    H = hom(c, x).basis
    E = hom(c, c).basis

    def spans(keep):
        vecs = [map_vector(compose(H[s], g)) for s in keep for g in E]
        if not vecs:
            return len(H) == 0
        return rank(QMatrix.from_rows(vecs)) == len(H)

    keep = list(range(len(H)))
    for idx in range(len(H)):
        trial = [k for k in keep if k != idx]
        if spans(trial):
            keep = trial
    comps = tuple(H[k] for k in keep)
    if not comps:
        src = zero_rep(c.algebra)
        return Approximation(src, src, (), zero_map(src, x))
    src = direct_sum([c] * len(comps))
    fmap = tuple(hstack([f[i] for f in comps], rows=x.dims[i]) for i in range(len(x.dims)))
    ker, _ = kernel(fmap, src)
    return Approximation(src, ker, comps, fmap)


# -- endomorphisms, splitting, isomorphism ---------------------------------

def _trace(f: Map) -> Fraction:
    return sum((m[i, i] for m in f for i in range(m.rows)), Fraction(0))


def end_radical(x: Rep) -> Tuple[tuple, QMatrix]:
    """(End basis, coefficient columns spanning rad End) via the trace form.

    In characteristic zero rad A = {a : tr(ab) = 0 for all b in A} for any
    faithful representation of A.
    """
    B = hom(x, x).basis
    G = QMatrix.from_rows([[_trace(compose(bi, bj)) for bj in B] for bi in B], cols=len(B))
    return B, kernel_basis(G) if B else QMatrix.zeros(0, 0)


def is_local_split(x: Rep) -> bool:
    """End(x) local with residue field Q."""
    B, R = end_radical(x)
    return len(B) - R.cols == 1


class SplitSearchExhausted(RuntimeError):
    pass


def _fitting(x: Rep, h: Map) -> Optional[Tuple[Rep, Rep]]:
    N = max(x.dims) if x.dims else 0
    hp = tuple(matrix_power(m, N) for m in h)
    kers = kernel_spaces(hp)
    ims = image_spaces(hp)
    if all(k.cols == 0 for k in kers) or all(i.cols == 0 for i in ims):
        return None
    return subrep(x, kers)[0], subrep(x, ims)[0]


def _poly_split(x: Rep, h: Map) -> Optional[Tuple[Rep, Rep]]:
    import sympy

    t = sympy.Symbol("t")
    cp = sympy.Integer(1)
    for m in h:
        if m.rows:
            cp *= sympy.Matrix(m.rows, m.cols, [sympy.Rational(e.numerator, e.denominator) for e in m.entries]).charpoly(t).as_expr()
    _, factors = sympy.factor_list(sympy.expand(cp), t)
    if len(factors) < 2:
        return None
    f = sympy.Poly(factors[0][0], t)
    coeffs = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in f.all_coeffs()]
    fh = []
    for m in h:
        acc = QMatrix.zeros(m.rows, m.cols)
        for c in coeffs:
            acc = acc @ m + QMatrix.identity(m.rows).scale(c)
        fh.append(acc)
    return _fitting(x, tuple(fh))


def split_summands(x: Rep) -> List[Rep]:
    """Decompose x into indecomposables without a catalog (Fitting lemma)."""
    if x.is_zero():
        return []
    B, R = end_radical(x)
    if len(B) - R.cols == 1:
        return [x]
    candidates = list(B)
    for i in range(len(B)):
        for j in range(i + 1, len(B)):
            for c in (1, -1, 2):
                candidates.append(linear_combination([B[i], B[j]], [1, c], x, x))
    for h in candidates:
        parts = _fitting(x, h)
        if parts is None:
            parts = _poly_split(x, h)
        if parts is not None:
            return split_summands(parts[0]) + split_summands(parts[1])
    raise SplitSearchExhausted(f"split search exhausted on module of dims {x.dims}")


def is_summand(n: Rep, x: Rep) -> Optional[Tuple[Map, Map]]:
    """For indecomposable n, return (f: n -> x, g: x -> n) with g f = id_n, if any."""
    if any(a > b for a, b in zip(n.dims, x.dims)):
        return None
    F = hom(n, x).basis
    G = hom(x, n).basis
    for f in F:
        for g in G:
            gf = compose(g, f)
            if is_iso_map(gf):
                inv = tuple(_inv(m) for m in gf)
                return f, compose(inv, g)
    return None


def _inv(m: QMatrix) -> QMatrix:
    return solve(m, QMatrix.identity(m.rows))


def iso_indecomposable(x: Rep, n: Rep) -> bool:
    """Isomorphism test against an indecomposable n (exact; no search bound)."""
    if x.algebra is not n.algebra or x.dims != n.dims:
        return False
    return is_summand(n, x) is not None


def iso(x: Rep, y: Rep) -> bool:
    _check_same(x, y)
    if x.dims != y.dims:
        return False
    if x.is_zero():
        return True
    xs, ys = split_summands(x), split_summands(y)
    if len(xs) != len(ys):
        return False
    remaining = list(ys)
    for s in xs:
        for k, t in enumerate(remaining):
            if iso_indecomposable(s, t):
                remaining.pop(k)
                break
        else:
            return False
    return True


def add_approximation(cs: Sequence[Rep], x: Rep) -> Approximation:
    """Minimal right add(c_1 + ... + c_k)-approximation of x.

    Each c_j should have local endomorphism ring.  Generators are the hom
    bases; a generator is dropped while every map c_j -> x still factors
    through the remaining ones.
    """
    gens = [(j, f) for j, c in enumerate(cs) for f in hom(c, x).basis]
    homs = [hom(c, x) for c in cs]

    def spans(keep):
        for j, c in enumerate(cs):
            if not homs[j].dim:
                continue
            vecs = [map_vector(compose(f, g)) for k, f in keep for g in hom(c, cs[k]).basis]
            if not vecs or rank(QMatrix.from_rows(vecs)) != homs[j].dim:
                return False
        return True

    keep = list(gens)
    for item in gens:
        trial = [g for g in keep if g is not item]
        if spans(trial):
            keep = trial
    if not keep:
        src = zero_rep(x.algebra)
        return Approximation(src, src, (), zero_map(src, x))
    src = direct_sum([cs[j] for j, _ in keep])
    fmap = tuple(hstack([f[i] for _, f in keep], rows=x.dims[i]) for i in range(len(x.dims)))
    ker, _ = kernel(fmap, src)
    return Approximation(src, ker, tuple(keep), fmap)


def relative_presentation(projs: Sequence[Rep], x: Rep) -> Tuple[Rep, Rep, Map]:
    """(P1, P0, d) with P1 -> P0 -> x -> 0 minimal over add(projs).

    ``projs`` are the indecomposable Ext-projectives of a wide subcategory
    containing x; with the projectives of the algebra this is the minimal
    projective presentation.
    """
    top = add_approximation(projs, x)
    if top.source.is_zero():
        z = zero_rep(x.algebra)
        return z, z, zero_map(z, z)
    ker, incl = kernel(top.map, top.source)
    if ker.is_zero():
        z = zero_rep(x.algebra)
        return z, top.source, zero_map(z, top.source)
    second = add_approximation(projs, ker)
    return second.source, top.source, compose(incl, second.map)


def shifted_cone_top(projs: Sequence[Rep], u: Rep, q: Rep) -> Rep:
    """H^0 of the cone of the add(P_u)-approximation P_u^m -> q[1].

    P_u = (P1 -> P0) presents u over add(projs) and q is one of the
    Ext-projectives.  The cone is (P1^m -> P0^m + q) shifted once, with the
    components P1 -> q running over a basis of Hom(P1, q); null-homotopic
    components only add copies of u.
    """
    p1, p0, d = relative_presentation(projs, u)
    hs = hom(p1, q).basis if not p1.is_zero() else []
    m = len(hs)
    if m == 0:
        return q
    target = direct_sum([p0] * m + [q])
    phi = []
    for i in range(len(q.dims)):
        r0, r1, rq = p0.dims[i], p1.dims[i], q.dims[i]
        rows = []
        for k in range(m):
            blocks = [d[i] if kk == k else QMatrix.zeros(r0, r1) for kk in range(m)]
            rows.append(hstack(blocks, rows=r0))
        rows.append(hstack([h[i] for h in hs], rows=rq))
        phi.append(vstack(rows, cols=m * r1))
    y, _ = quotient(target, image_spaces(tuple(phi)))
    return y


# -- Auslander-Reiten sequences ---------------------------------------

def ar_middle(x: Rep) -> Rep:
    """Middle term of the almost split sequence 0 -> tau x -> E -> x -> 0."""
    y = tau(x)
    if y.is_zero():
        raise RepError("ar_middle needs a non-projective module")
    q = x.algebra.quiver
    Z, B, layout = ext1_cocycles(x, y)
    n = Z.rows
    ann = kernel_basis(B.T).T if B.cols else QMatrix.identity(n)
    ends, rad = end_radical(x)
    conds = []
    for k in range(rad.cols):
        r = linear_combination(ends, rad.col(k), x, x)
        cols = []
        for z in range(Z.cols):
            phi = Z.col(z)
            out = []
            for name, off, rr, cc in layout:
                s = q.vertex_index(q.arrow(name).source)
                m = QMatrix(rr, cc, tuple(phi[off:off + rr * cc]))
                out.extend((m @ r[s]).entries)
            cols.append(out)
        conds.append(ann @ QMatrix.from_cols(cols, n))
    S = kernel_basis(vstack(conds, cols=Z.cols)) if conds else QMatrix.identity(Z.cols)
    proj = ann @ Z @ S
    if rank(proj) != 1:
        raise RepError(f"socle of Ext(x, tau x) has dimension {rank(proj)}; residue field is not Q")
    pick = next(c for c in range(S.cols) if any(proj.col(c)))
    zeta = (Z @ S.select_cols([pick])).col(0)
    maps = []
    for (name, off, rr, cc), xa, ya in zip(layout, x.maps, y.maps):
        phi = QMatrix(rr, cc, tuple(zeta[off:off + rr * cc]))
        top = hstack([ya, phi], rows=ya.rows)
        bottom = hstack([QMatrix.zeros(xa.rows, ya.cols), xa], rows=xa.rows)
        maps.append(vstack([top, bottom], cols=ya.cols + xa.cols))
    dims = [dy + dx for dy, dx in zip(y.dims, x.dims)]
    return Rep(x.algebra, dims, maps, check=False)
