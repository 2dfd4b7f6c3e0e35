"""Graded presentations, minimal free resolutions, and canonical modules.

Conventions. A presentation M = coker(A) stores A row-major; rows index the
generators of M (degrees row_twists, so F_0 = ⊕ S(-σ_i)) and columns index
relations (degrees col_twists). A nonzero entry a_ij must satisfy
scale*deg(a_ij) = col_twists[j] - row_twists[i]. The `scale` field lets a
module carry a grading in which the ambient variables have degree `scale`
(used for Frobenius pushforwards, where generator degrees are measured in
p-th roots); ordinary modules use scale 1.

`modulus` is None for modules over the polynomial ring S itself and the
defining ideal I for modules over R = S/I; matrix entries are then
representatives in S understood mod I.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PipelineInvariantError
from .gfpoly import Polynomial, mono_divides, monomials_of_degree
from .groebner import (
    Ideal,
    PolyRing,
    RingSpec,
    _hilbert_numerator_cached,
    _minimalize_monomials,
    ideal_colon,
    ideal_intersect,
)
from .modgb import (
    Vec,
    kernel_over_quotient,
    lead_module,
    module_groebner,
    reduce_vec,
    syzygy_basis,
    vec_nf_mod_ideal,
)


def matrix_from_columns(cols, nrows: int, ring: PolyRing):
    """Row-major Polynomial matrix from a list of Vecs in S^nrows."""
    zero = ring.zero()
    rows = [[zero] * len(cols) for _ in range(nrows)]
    for j, v in enumerate(cols):
        for comp, f in v.as_poly_dict().items():
            if comp >= nrows:
                raise ValueError("column component out of range")
            rows[comp][j] = f
    return [tuple(r) for r in rows]


def columns_of_matrix(matrix, p: int, nvars: int):
    """Vec columns (possibly zero) of a row-major Polynomial matrix."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    out = []
    for j in range(ncols):
        terms: dict = {}
        for i, row in enumerate(matrix):
            f = row[j]
            if f is not None and not f.is_zero():
                for m, c in f.terms.items():
                    terms[(i, m)] = c
        out.append(Vec._raw(p, nvars, terms))
    return out


def transpose_matrix(matrix, ring: PolyRing):
    if not matrix:
        return []
    nrows = len(matrix)
    ncols = len(matrix[0])
    return [tuple(matrix[i][j] for i in range(nrows)) for j in range(ncols)]


class ModulePresentation:
    """A graded module given as the cokernel of a matrix over S or R."""

    __slots__ = (
        "ring",
        "modulus",
        "matrix",
        "row_twists",
        "col_twists",
        "scale",
        "mult_lifts",
        "_lead",
    )

    def __init__(
        self,
        ring: PolyRing,
        modulus,
        matrix,
        row_twists,
        col_twists,
        scale: int = 1,
        mult_lifts=None,
    ):
        self.ring = ring
        self.modulus = modulus
        self.matrix = tuple(tuple(row) for row in matrix)
        self.row_twists = tuple(row_twists)
        self.col_twists = tuple(col_twists)
        self.scale = scale
        self.mult_lifts = mult_lifts
        self._lead = None
        if len(self.matrix) != len(self.row_twists):
            raise ValueError("row count does not match row twists")
        for row in self.matrix:
            if len(row) != len(self.col_twists):
                raise ValueError("column count does not match col twists")
        for i, row in enumerate(self.matrix):
            for j, f in enumerate(row):
                if f.is_zero():
                    continue
                if not f.is_homogeneous():
                    raise ValueError("presentation entries must be homogeneous")
                want = self.col_twists[j] - self.row_twists[i]
                if self.scale * f.degree() != want:
                    raise ValueError(
                        f"entry ({i},{j}) has scaled degree "
                        f"{self.scale * f.degree()}, twists demand {want}"
                    )

    @property
    def nrows(self) -> int:
        return len(self.row_twists)

    @property
    def ncols(self) -> int:
        return len(self.col_twists)

    def columns(self):
        return columns_of_matrix(self.matrix, self.ring.p, self.ring.n)

    def nf_entries(self) -> "ModulePresentation":
        if self.modulus is None:
            return self
        matrix = [
            [self.modulus.normal_form(f) for f in row] for row in self.matrix
        ]
        return ModulePresentation(
            self.ring, self.modulus, matrix, self.row_twists,
            self.col_twists, self.scale, self.mult_lifts,
        )

    def groebner_columns(self):
        """Module Groebner basis of (columns + modulus relations)."""
        if self._lead is None:
            cols = [v for v in self.columns() if not v.is_zero()]
            if self.modulus is not None:
                for i in range(self.nrows):
                    for g in self.modulus.generators:
                        cols.append(
                            Vec._raw(
                                self.ring.p,
                                self.ring.n,
                                {(i, m): c for m, c in g.terms.items()},
                            )
                        )
            gb = module_groebner(cols)
            self._lead = (tuple(gb), lead_module(gb))
        return self._lead[0]

    def lead_data(self) -> dict:
        """Lead module of (columns + modulus relations), per component."""
        self.groebner_columns()
        return self._lead[1]

    def hf(self, d: int) -> int:
        """k-dimension of the cokernel in scaled degree d."""
        lead = self.lead_data()
        total = 0
        for i, s in enumerate(self.row_twists):
            rem = d - s
            if rem < 0 or rem % self.scale:
                continue
            deg = rem // self.scale
            leads_i = lead.get(i, ())
            for m in monomials_of_degree(self.ring.n, deg):
                if not any(mono_divides(l, m) for l in leads_i):
                    total += 1
        return total

    def numerator_scaled(self) -> dict:
        """Laurent numerator of the Hilbert series over (1-t^scale)^n."""
        lead = self.lead_data()
        total: dict = {}
        for i, s in enumerate(self.row_twists):
            leads_i = _minimalize_monomials(tuple(lead.get(i, ())))
            num = dict(_hilbert_numerator_cached(leads_i, self.ring.n))
            for d, c in num.items():
                key = self.scale * d + s
                v = total.get(key, 0) + c
                if v:
                    total[key] = v
                else:
                    total.pop(key, None)
        return total

    def minimized(self) -> "ModulePresentation":
        """Cancel unit entries and drop zero relation columns.

        The result presents the same module with a minimal generating set.
        Multiplication lifts are not transformed, so they must be absent.
        """
        if self.mult_lifts is not None:
            raise PipelineInvariantError("cannot minimize a presentation with lifts")
        p = self.ring.p
        work = self.nf_entries()
        rows = [list(r) for r in work.matrix]
        rtw = list(work.row_twists)
        ctw = list(work.col_twists)
        while True:
            pivot = None
            for i, row in enumerate(rows):
                for j, f in enumerate(row):
                    if f.is_constant() and not f.is_zero():
                        pivot = (i, j)
                        break
                if pivot:
                    break
            if pivot is None:
                break
            i, j = pivot
            inv = pow(rows[i][j].constant_value(), p - 2, p)
            for l in range(len(ctw)):
                if l == j or rows[i][l].is_zero():
                    continue
                factor = rows[i][l] * inv
                for k in range(len(rtw)):
                    rows[k][l] = rows[k][l] - factor * rows[k][j]
            for k in range(len(rtw)):
                if k == i or rows[k][j].is_zero():
                    continue
                factor = rows[k][j] * inv
                for l in range(len(ctw)):
                    rows[k][l] = rows[k][l] - factor * rows[i][l]
            rows = [r for k, r in enumerate(rows) if k != i]
            rtw = [t for k, t in enumerate(rtw) if k != i]
            rows = [[e for l, e in enumerate(r) if l != j] for r in rows]
            ctw = [t for l, t in enumerate(ctw) if l != j]
            if self.modulus is not None:
                rows = [[self.modulus.normal_form(f) for f in r] for r in rows]
        keep_cols = [
            l for l in range(len(ctw)) if any(not r[l].is_zero() for r in rows)
        ]
        rows = [[r[l] for l in keep_cols] for r in rows]
        ctw = [ctw[l] for l in keep_cols]
        return ModulePresentation(self.ring, self.modulus, rows, rtw, ctw, self.scale)

    def is_zero_module(self) -> bool:
        return self.minimized().nrows == 0

    def free_rank_one_twist(self):
        """Generator degree if the module is free of rank one, else None."""
        small = self.minimized()
        if small.nrows != 1:
            return None
        if small.ncols != 0:
            return None
        return small.row_twists[0]

    def minimal_generator_count(self) -> int:
        return self.minimized().nrows

    def __repr__(self):
        return (
            f"ModulePresentation({self.nrows} gens, {self.ncols} rels, "
            f"twists {self.row_twists}, scale {self.scale})"
        )


def frobenius_functor(pres: ModulePresentation, e: int = 1) -> ModulePresentation:
    """Base change along e-fold Frobenius: entries and twists to q-th powers.

    For M = coker(A) over R this is coker(A^[q]), q = p^e, the right-exact
    Frobenius functor applied to the presentation.
    """
    if pres.modulus is None:
        raise ValueError("Frobenius functor is applied to modules over a quotient")
    if pres.mult_lifts is not None:
        raise PipelineInvariantError("lifts do not survive the Frobenius functor")
    q = pres.ring.p ** e
    matrix = [[f.frobenius_power(e) for f in row] for row in pres.matrix]
    return ModulePresentation(
        pres.ring,
        pres.modulus,
        matrix,
        [q * s for s in pres.row_twists],
        [q * g for g in pres.col_twists],
        pres.scale,
    )


# ---------------------------------------------------------------------------
# minimal generators (graded Nakayama: irredundant homogeneous sets are minimal)

def minimal_generators(vecs, twists, nrows: int, modulus=None, ring: PolyRing = None):
    """Irredundant subset of homogeneous `vecs` generating the same submodule.

    Candidates are processed in weakly increasing degree; each is dropped if
    it already lies in the submodule generated by the accepted ones (plus
    modulus multiples of the ambient basis when working over a quotient).
    """
    items = []
    for v in vecs:
        if v.is_zero():
            continue
        if modulus is not None:
            v = vec_nf_mod_ideal(v, modulus)
            if v.is_zero():
                continue
        items.append((v.degree_with_twists(twists), v))
    items.sort(key=lambda t: t[0])
    base = []
    if modulus is not None:
        p = modulus.ring.p
        nv = modulus.ring.n
        for i in range(nrows):
            for g in modulus.generators:
                base.append(Vec._raw(p, nv, {(i, m): c for m, c in g.terms.items()}))
    accepted = []
    for _, v in items:
        gens = accepted + base
        if gens:
            gb = module_groebner(gens)
            if reduce_vec(v, gb).is_zero():
                continue
        accepted.append(v)
    return accepted


# ---------------------------------------------------------------------------
# free resolutions over the polynomial ring

@dataclass(frozen=True)
class FreeResolution:
    """Minimal graded free resolution ... -> F_1 -> F_0 of a module.

    maps[k] is the matrix of d_{k+1}: F_{k+1} -> F_k (rows = rank F_k).
    Over the polynomial ring resolutions are finite; over a singular quotient
    they may be truncated at a step budget, in which case `truncated` is set
    (the prefix maps are still exact where computed).
    """

    ring: PolyRing
    twists: tuple
    maps: tuple
    modulus: Ideal = None
    truncated: bool = False

    @property
    def length(self) -> int:
        return len(self.twists) - 1

    def betti(self) -> tuple:
        return tuple(len(t) for t in self.twists)

    def rank(self, k: int) -> int:
        return len(self.twists[k]) if k < len(self.twists) else 0

    def map_matrix(self, k: int):
        """Matrix of d_k: F_k -> F_{k-1}, or None past the end."""
        if 1 <= k <= len(self.maps):
            return self.maps[k - 1]
        return None


def resolve_columns(ring: PolyRing, start_twists, start_cols, max_steps=None) -> FreeResolution:
    """Resolution of coker(start_cols) over S, minimal at every step."""
    n = ring.n
    cap = n + 1 if max_steps is None else max_steps
    cols = minimal_generators(start_cols, start_twists, len(start_twists))
    twists = [tuple(start_twists)]
    maps = []
    cur = tuple(start_twists)
    while cols:
        if len(maps) >= cap:
            break
        ctw = tuple(v.degree_with_twists(cur) for v in cols)
        maps.append(tuple(matrix_from_columns(cols, len(cur), ring)))
        twists.append(ctw)
        if len(maps) > n:
            raise PipelineInvariantError("resolution exceeds the global dimension bound")
        syz = syzygy_basis(cols, nreal=len(cur))
        cur = ctw
        cols = minimal_generators(syz, cur, len(cur))
    return FreeResolution(ring, tuple(twists), tuple(maps))


def minimal_free_resolution(rs: RingSpec, max_steps=None) -> FreeResolution:
    """Minimal graded free resolution of R = S/I as an S-module."""
    gens = [
        Vec._raw(rs.ring.p, rs.ring.n, {(0, m): c for m, c in g.terms.items()})
        for g in rs.ideal.groebner_basis()
    ]
    return resolve_columns(rs.ring, (0,), gens, max_steps=max_steps)


def resolve_presentation(pres: ModulePresentation, max_steps=None) -> FreeResolution:
    """Free resolution of coker(pres) over its ring, minimal at every step.

    Over the polynomial ring (modulus None) this terminates within the number
    of variables; over a quotient ring it is cut off after max_steps maps
    (default n + 2) and flagged truncated if syzygies remain.
    """
    if pres.scale != 1:
        raise ValueError("resolutions expect scale-1 gradings")
    work = pres.nf_entries().minimized()
    ring, modulus = pres.ring, pres.modulus
    n = ring.n
    if modulus is None:
        return resolve_columns(ring, work.row_twists, work.columns(), max_steps=max_steps)
    cap = n + 2 if max_steps is None else max_steps
    cols = minimal_generators(
        work.columns(), work.row_twists, work.nrows, modulus=modulus
    )
    twists = [work.row_twists]
    maps = []
    cur = work.row_twists
    truncated = False
    while cols:
        if len(maps) >= cap:
            truncated = True
            break
        ctw = tuple(v.degree_with_twists(cur) for v in cols)
        maps.append(tuple(matrix_from_columns(cols, len(cur), ring)))
        twists.append(ctw)
        syz = kernel_over_quotient(cols, nrows=len(cur), defining_ideal=modulus)
        cur = ctw
        cols = minimal_generators(syz, cur, len(cur), modulus=modulus)
    return FreeResolution(
        ring, tuple(twists), tuple(maps), modulus=modulus, truncated=truncated
    )


def tor_frobenius(rs: RingSpec, pres: ModulePresentation, i: int, e: int = 1):
    """Tor_i of the e-fold Frobenius against M = coker(pres) over R.

    Computed as homology of a free resolution of M over R with the Frobenius
    functor applied to every differential. Returns a FiniteLengthModule when
    the homology has finite length, otherwise its ModulePresentation.
    """
    from .artinian import realize_finite

    if i < 0:
        raise ValueError("homological degree must be nonnegative")
    if pres.modulus is None:
        pres = ModulePresentation(
            rs.ring, rs.ideal, pres.matrix, pres.row_twists, pres.col_twists
        )
    if i == 0:
        result = frobenius_functor(pres.nf_entries().minimized(), e)
        return _finite_or_presentation(result)
    q = rs.p**e
    res = resolve_presentation(pres, max_steps=i + 1)
    if res.length < i:
        empty = ModulePresentation(rs.ring, rs.ideal, [], [], [])
        return realize_finite(empty)
    d_i = [[f.frobenius_power(e) for f in row] for row in res.map_matrix(i)]
    ker = kernel_over_quotient(
        columns_of_matrix(d_i, rs.ring.p, rs.ring.n),
        nrows=res.rank(i - 1),
        defining_ideal=rs.ideal,
    )
    im_cols = []
    next_map = res.map_matrix(i + 1)
    if next_map is not None:
        d_next = [[f.frobenius_power(e) for f in row] for row in next_map]
        im_cols = columns_of_matrix(d_next, rs.ring.p, rs.ring.n)
    ambient = [q * t for t in res.twists[i]]
    homology = subquotient_presentation(rs.ring, rs.ideal, ambient, ker, im_cols)
    return _finite_or_presentation(homology)


def _finite_or_presentation(pres: ModulePresentation):
    from .artinian import realize_finite
    from .errors import InfiniteLengthError

    try:
        return realize_finite(pres)
    except InfiniteLengthError:
        return pres


def projective_dimension(rs: RingSpec) -> int:
    return minimal_free_resolution(rs).length


def ring_depth(rs: RingSpec) -> int:
    """depth R = n - pd_S(R) over the regular ambient ring."""
    return rs.ring.n - projective_dimension(rs)


# ---------------------------------------------------------------------------
# canonical module via duals of the resolution

def _dual_map_matrix(res: FreeResolution, k: int):
    """Matrix of d_k^T: F_{k-1}^* -> F_k^* (rows = rank F_k)."""
    return transpose_matrix(list(res.maps[k - 1]), res.ring)


def subquotient_presentation(
    ring: PolyRing,
    modulus: Ideal,
    ambient_twists,
    kernel_gens,
    image_cols,
    shift: int = 0,
) -> ModulePresentation:
    """Present (submodule gen by kernel_gens)/(submodule gen by image_cols).

    Both gen sets live in a free S-module with the given twists; the quotient
    is a module over ring/modulus. `shift` is added to all generator degrees.
    """
    gens = minimal_generators(kernel_gens, ambient_twists, len(ambient_twists))
    extra = [v for v in image_cols if not v.is_zero()]
    reduced = []
    if extra:
        gb_im = module_groebner(extra)
        for v in gens:
            r = reduce_vec(v, gb_im)
            if not r.is_zero():
                reduced.append(v)
        gens = minimal_generators(reduced, ambient_twists, len(ambient_twists))
    if not gens:
        return ModulePresentation(ring, modulus, [], [], [])
    row_twists = [v.degree_with_twists(ambient_twists) + shift for v in gens]
    stacked = list(gens) + list(extra)
    syz = syzygy_basis(stacked, nreal=len(ambient_twists))
    rel_cols = []
    for w in syz:
        head = w.restrict_components(0, len(gens))
        if modulus is not None:
            head = vec_nf_mod_ideal(head, modulus)
        if not head.is_zero():
            rel_cols.append(head)
    rel_cols = minimal_generators(
        rel_cols, row_twists, len(gens), modulus=modulus
    )
    col_twists = [v.degree_with_twists(row_twists) for v in rel_cols]
    matrix = matrix_from_columns(rel_cols, len(gens), ring)
    return ModulePresentation(ring, modulus, matrix, row_twists, col_twists)


def canonical_module(rs: RingSpec, res: FreeResolution = None) -> ModulePresentation:
    """Graded canonical module ω = Ext^(n-1)_S(R, S(-n)) for dim R = 1.

    For Cohen-Macaulay R (pd = n-1) this is the cokernel of the transposed
    last map; at depth 0 (pd = n) it is the middle cohomology of the dualized
    resolution, presented as a subquotient.
    """
    ring = rs.ring
    n = ring.n
    if res is None:
        res = minimal_free_resolution(rs)
    pd = res.length
    c = n - 1
    if pd < c:
        raise PipelineInvariantError("canonical module requested below the support codim")
    row_twists = [n - t for t in res.twists[c]]
    if c == 0:
        return ModulePresentation(ring, rs.ideal, [[] for _ in row_twists], row_twists, [])
    dual_c = _dual_map_matrix(res, c)  # rows = rank F_c, cols = rank F_{c-1}
    col_twists = [n - t for t in res.twists[c - 1]]
    if pd == c:
        matrix = [
            [rs.ideal.normal_form(f) for f in row] for row in dual_c
        ]
        pres = ModulePresentation(ring, rs.ideal, matrix, row_twists, col_twists)
        return pres.minimized()
    # depth 0: ω = ker(d_{c+1}^T) / im(d_c^T) inside F_c^*
    dual_next = _dual_map_matrix(res, c + 1)  # rows = rank F_{c+1}, cols = rank F_c
    next_cols = columns_of_matrix(dual_next, ring.p, ring.n)
    ker = syzygy_basis(next_cols, nreal=res.rank(c + 1))
    im_cols = columns_of_matrix(dual_c, ring.p, ring.n)
    ambient = [-t for t in res.twists[c]]
    return subquotient_presentation(
        ring, rs.ideal, ambient, ker, im_cols, shift=n
    ).minimized()


# ---------------------------------------------------------------------------
# Hom into the ring, and module annihilators

def hom_into_ring_generators(pres: ModulePresentation):
    """Generators of Hom_R(M, R) for M = coker(A) over R = S/I.

    Returns (vec, degree) pairs; vec component i is the image of generator i.
    """
    if pres.modulus is None:
        raise ValueError("hom_into_ring_generators expects a module over a quotient")
    if pres.scale != 1:
        raise ValueError("hom_into_ring_generators expects scale-1 gradings")
    r, c = pres.nrows, pres.ncols
    dual_twists = [-s for s in pres.row_twists]
    if c == 0:
        return [
            (Vec.unit(pres.ring.p, pres.ring.n, i), dual_twists[i])
            for i in range(r)
        ]
    cols_T = columns_of_matrix(
        transpose_matrix(list(pres.matrix), pres.ring), pres.ring.p, pres.ring.n
    )
    ker = kernel_over_quotient(cols_T, nrows=c, defining_ideal=pres.modulus)
    return [(w, w.degree_with_twists(dual_twists)) for w in ker]


def with_modulus(pres: ModulePresentation, new_ideal: Ideal) -> ModulePresentation:
    """The same presentation matrix viewed over a further quotient ring."""
    if pres.mult_lifts is not None:
        raise PipelineInvariantError("lifts are not transported across quotients")
    matrix = [[new_ideal.normal_form(f) for f in row] for row in pres.matrix]
    return ModulePresentation(
        pres.ring, new_ideal, matrix, pres.row_twists, pres.col_twists, pres.scale
    )


def annihilator_is_zero(rs: RingSpec, vec: Vec) -> bool:
    """Is ann_R of the element `vec` of R^r zero, i.e. ∩_i (I : v_i) = I?"""
    ann = None
    for _, f in vec.as_poly_dict().items():
        col = ideal_colon(rs.ideal, Ideal(rs.ring, [f]))
        ann = col if ann is None else ideal_intersect(ann, col)
    if ann is None:
        return False  # zero vector annihilated by everything
    return ann == rs.ideal


def syzygy_presentation(pres: ModulePresentation) -> ModulePresentation:
    """First syzygy module of the presentation matrix.

    The result presents ker(F_1 -> F_0): its generators are the kernel
    columns, living in the free source of `pres`, with their own relations
    left implicit (empty relation matrix, generators only).
    """
    if pres.scale != 1:
        raise ValueError("syzygies expect scale-1 gradings")
    work = pres.nf_entries()
    cols = [v for v in work.columns() if not v.is_zero()]
    if not cols:
        gens = []
    elif pres.modulus is None:
        gens = minimal_generators(
            syzygy_basis(cols, nreal=work.nrows), work.col_twists, work.ncols
        )
    else:
        raw = kernel_over_quotient(
            cols, nrows=work.nrows, defining_ideal=pres.modulus
        )
        gens = minimal_generators(
            raw, work.col_twists, work.ncols, modulus=pres.modulus
        )
    matrix = matrix_from_columns(gens, work.ncols, pres.ring)
    twists = [v.degree_with_twists(work.col_twists) for v in gens]
    return ModulePresentation(
        pres.ring, pres.modulus, matrix, work.col_twists, twists
    )


def is_free_rank_one(pres: ModulePresentation):
    """(flag, generator degree): is the module free of rank one over its ring?

    The presentation is minimized; freeness of the single remaining generator
    means no relation columns survive.
    """
    tw = pres.free_rank_one_twist()
    return (tw is not None), tw


# ---------------------------------------------------------------------------
# Hom between presented modules (ordinary module structure)

def hom_presentation_generic(
    m: ModulePresentation, n: ModulePresentation
) -> ModulePresentation:
    """Present Hom_R(M, N) for M = coker(A), N = coker(C) over the same ring.

    A homomorphism is a matrix X (target generators by source generators)
    with X*A landing in the column space of C; X is zero in Hom when its
    columns lie in that column space. Both conditions are syzygy problems
    over R in a flattened free module.
    """
    if m.modulus != n.modulus or m.ring != n.ring:
        raise ValueError("hom requires modules over the same ring")
    if m.scale != 1 or n.scale != 1:
        raise ValueError("hom expects scale-1 gradings")
    if m.mult_lifts is not None or n.mult_lifts is not None:
        raise PipelineInvariantError("generic hom does not use multiplication lifts")
    ring = m.ring
    p, nv = ring.p, ring.n
    modulus = m.modulus
    mm = m.nf_entries().minimized()
    nn = n.nf_entries().minimized()
    f0, f1 = mm.nrows, mm.ncols
    g0, g1 = nn.nrows, nn.ncols
    alpha, alpha1 = mm.row_twists, mm.col_twists
    beta, beta1 = nn.row_twists, nn.col_twists
    nslots = g0 * f0
    slot_twists = [beta[u] - alpha[j] for u in range(g0) for j in range(f0)]
    if nslots == 0:
        return ModulePresentation(ring, modulus, [], [], [])

    def slot(u, j):
        return u * f0 + j

    if f1 == 0:
        lifts = [Vec.unit(p, nv, s) for s in range(nslots)]
    else:
        cond_cols = []
        for u in range(g0):
            for j in range(f0):
                terms = {}
                for l in range(f1):
                    a = mm.matrix[j][l]
                    for mo, c in a.terms.items():
                        terms[(u * f1 + l, mo)] = c
                cond_cols.append(Vec._raw(p, nv, terms))
        for l in range(f1):
            for c in range(g1):
                terms = {}
                for u in range(g0):
                    f = nn.matrix[u][c]
                    for mo, cc in f.terms.items():
                        terms[(u * f1 + l, mo)] = cc
                if terms:
                    cond_cols.append(Vec._raw(p, nv, terms))
        if modulus is None:
            raw = syzygy_basis(cond_cols, nreal=g0 * f1)
        else:
            raw = kernel_over_quotient(
                cond_cols, nrows=g0 * f1, defining_ideal=modulus
            )
        lifts = []
        for w in raw:
            head = w.restrict_components(0, nslots)
            if modulus is not None:
                head = vec_nf_mod_ideal(head, modulus)
            if not head.is_zero():
                lifts.append(head)
    zero_homs = []
    for j in range(f0):
        for c in range(g1):
            terms = {}
            for u in range(g0):
                f = nn.matrix[u][c]
                for mo, cc in f.terms.items():
                    terms[(slot(u, j), mo)] = cc
            if terms:
                zero_homs.append(Vec._raw(p, nv, terms))
    gens = []
    if lifts or zero_homs:
        pool = lifts
        if zero_homs:
            gb_zero = module_groebner(
                zero_homs
                + (
                    [
                        Vec._raw(p, nv, {(s, mo): c for mo, c in g.terms.items()})
                        for s in range(nslots)
                        for g in modulus.generators
                    ]
                    if modulus is not None
                    else []
                )
            )
            pool = [v for v in lifts if not reduce_vec(v, gb_zero).is_zero()]
        gens = minimal_generators(pool, slot_twists, nslots, modulus=modulus)
    if not gens:
        return ModulePresentation(ring, modulus, [], [], [])
    gen_twists = [v.degree_with_twists(slot_twists) for v in gens]
    stacked = list(gens) + zero_homs
    if modulus is None:
        syz = syzygy_basis(stacked, nreal=nslots)
    else:
        syz = kernel_over_quotient(stacked, nrows=nslots, defining_ideal=modulus)
    rel_cols = []
    for w in syz:
        head = w.restrict_components(0, len(gens))
        if modulus is not None:
            head = vec_nf_mod_ideal(head, modulus)
        if not head.is_zero():
            rel_cols.append(head)
    rel_cols = minimal_generators(rel_cols, gen_twists, len(gens), modulus=modulus)
    rel_twists = [v.degree_with_twists(gen_twists) for v in rel_cols]
    matrix = matrix_from_columns(rel_cols, len(gens), ring)
    return ModulePresentation(ring, modulus, matrix, gen_twists, rel_twists)
