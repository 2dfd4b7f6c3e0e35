"""Finite-length graded modules as exact mod-p linear algebra.

A FiniteLengthModule fixes a k-basis and records the (commuting, nilpotent)
action of each ambient variable as a matrix. Matlis duality is transposition,
socles are common kernels, and hom spaces come from the linear conditions
F A_v = B_v F. Isomorphism testing combines structural invariants with a
search for an invertible homomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InfiniteLengthError, PipelineInvariantError
from .gfpoly import Polynomial, mono_divides, mono_mul, monomials_of_degree
from .groebner import RingSpec
from .linalg import Subspace, is_invertible, nullspace, rank
from .modgb import Vec, lead_module_is_finite_colength, reduce_vec
from .resolutions import ModulePresentation, frobenius_functor, matrix_from_columns


class FiniteLengthModule:
    """k-basis plus one action matrix per ambient variable (columns map basis
    vectors), with optional basis degrees for graded bookkeeping."""

    __slots__ = ("p", "dim", "actions", "degrees")

    def __init__(self, p: int, actions, degrees=None):
        self.p = p
        mats = tuple(np.array(a, dtype=np.int64) % p for a in actions)
        if not mats:
            raise ValueError("need at least one variable action")
        h = mats[0].shape[0]
        for a in mats:
            if a.shape != (h, h):
                raise ValueError("action matrices must be square of equal size")
        self.actions = mats
        self.dim = h
        self.degrees = tuple(degrees) if degrees is not None else None
        for i, a in enumerate(self.actions):
            for b in self.actions[i + 1 :]:
                if not np.array_equal(a @ b % p, b @ a % p):
                    raise ValueError("action matrices must commute")

    @property
    def nvars(self) -> int:
        return len(self.actions)

    def is_zero(self) -> bool:
        return self.dim == 0

    def act_monomial(self, vec, mono):
        """Apply the monomial action x^mono to a coordinate vector."""
        v = np.array(vec, dtype=np.int64) % self.p
        for i, e in enumerate(mono):
            for _ in range(e):
                v = self.actions[i] @ v % self.p
        return v

    def socle_dimension(self) -> int:
        if self.dim == 0:
            return 0
        stacked = np.vstack(self.actions) % self.p
        return self.dim - rank(stacked, self.p)

    def radical_span(self) -> Subspace:
        """Row-space object spanning m*M (images of all variable actions)."""
        sub = Subspace(self.dim, self.p)
        for a in self.actions:
            sub.add_rows(a.T % self.p)
        return sub

    def minimal_generator_count(self) -> int:
        return self.dim - self.radical_span().dim

    def loewy_series(self) -> tuple:
        """Dimensions (λ(M/mM), λ(mM/m^2M), ...) of the radical filtration."""
        out = []
        cur = np.eye(self.dim, dtype=np.int64)  # columns span m^0 M
        while cur.shape[1] > 0:
            cols = []
            for a in self.actions:
                cols.append(a @ cur % self.p)
            nxt = np.hstack(cols) if cols else cur[:, :0]
            sub = Subspace(self.dim, self.p)
            sub.add_rows(nxt.T)
            d_cur = rank(cur.T, self.p)
            d_nxt = sub.dim
            out.append(d_cur - d_nxt)
            if d_nxt == 0:
                break
            if d_nxt == d_cur:
                raise PipelineInvariantError("radical filtration does not descend")
            cur = sub.basis.T.copy()
        return tuple(out)

    def invariants(self) -> dict:
        return {
            "length": self.dim,
            "socle": self.socle_dimension(),
            "mingens": self.minimal_generator_count(),
            "loewy": self.loewy_series(),
        }

    def matlis_dual(self) -> "FiniteLengthModule":
        degs = tuple(-d for d in self.degrees) if self.degrees is not None else None
        return FiniteLengthModule(
            self.p, [a.T % self.p for a in self.actions], degs
        )

    def __repr__(self):
        return f"FiniteLengthModule(p={self.p}, dim={self.dim})"


def direct_sum(modules) -> FiniteLengthModule:
    """Block-diagonal direct sum of finite-length modules over the same ring."""
    mods = list(modules)
    if not mods:
        raise ValueError("direct sum of an empty family is not supported")
    p = mods[0].p
    nv = mods[0].nvars
    for m in mods:
        if m.p != p or m.nvars != nv:
            raise ValueError("summands live over different rings")
    actions = []
    for v in range(nv):
        blocks = [m.actions[v] for m in mods]
        total = sum(m.dim for m in mods)
        a = np.zeros((total, total), dtype=np.int64)
        at = 0
        for b in blocks:
            a[at : at + b.shape[0], at : at + b.shape[0]] = b
            at += b.shape[0]
        actions.append(a)
    if all(m.degrees is not None for m in mods):
        degrees = tuple(d for m in mods for d in m.degrees)
    else:
        degrees = None
    return FiniteLengthModule(p, actions, degrees)


def poly_action_matrix(module: FiniteLengthModule, f) -> np.ndarray:
    """Matrix of the action of a polynomial on the module."""
    out = np.zeros((module.dim, module.dim), dtype=np.int64)
    eye_cols = np.eye(module.dim, dtype=np.int64)
    for mono, c in f.terms.items():
        img = np.column_stack(
            [module.act_monomial(eye_cols[:, k], mono) for k in range(module.dim)]
        ) if module.dim else out
        out = (out + c * img) % module.p
    return out


# ---------------------------------------------------------------------------
# realizing presentations as finite-length modules

def realize_finite(pres: ModulePresentation) -> FiniteLengthModule:
    """Explicit finite-length module from a graded presentation over R.

    Basis elements are the standard monomial terms (comp, mono) outside the
    lead module of (columns + defining relations); raises InfiniteLengthError
    when some component admits arbitrarily large standard monomials.
    """
    ring = pres.ring
    n = ring.n
    p = ring.p
    if pres.nrows == 0:
        return FiniteLengthModule(p, [np.zeros((0, 0), dtype=np.int64)] * n, ())
    gb = pres.groebner_columns()
    lead = pres.lead_data()
    if not lead_module_is_finite_colength(lead, pres.nrows, n):
        raise InfiniteLengthError("presentation does not define a finite-length module")
    basis = []
    for i in range(pres.nrows):
        leads_i = lead.get(i, ())
        d = 0
        while True:
            found = [
                m
                for m in monomials_of_degree(n, d)
                if not any(mono_divides(l, m) for l in leads_i)
            ]
            if not found:
                break
            for m in found:
                basis.append((i, m, pres.scale * d + pres.row_twists[i]))
            d += 1
    basis.sort(key=lambda t: (t[2], t[0], t[1]))
    index = {(i, m): k for k, (i, m, _) in enumerate(basis)}
    h = len(basis)
    actions = []
    for v in range(n):
        a = np.zeros((h, h), dtype=np.int64)
        shift = tuple(1 if w == v else 0 for w in range(n))
        for (i, m, _), k in zip(basis, range(h)):
            target = tuple(e + s for e, s in zip(m, shift))
            image = reduce_vec(Vec._raw(p, n, {(i, target): 1}), gb)
            for (j, mm), c in image.terms.items():
                a[index[(j, mm)], k] = c
        actions.append(a)
    module = FiniteLengthModule(p, actions, tuple(d for _, _, d in basis))
    if pres.modulus is not None:
        for g in pres.modulus.generators:
            if poly_action_matrix(module, g).any():
                raise PipelineInvariantError(
                    "a defining relation of the ring acts nontrivially"
                )
    return module


def ring_as_module(rs: RingSpec) -> ModulePresentation:
    """R presented over itself: one generator in degree zero, no relations."""
    return ModulePresentation(rs.ring, rs.ideal, ((),), (0,), ())


def injective_hull_of_residue_field(rs: RingSpec) -> FiniteLengthModule:
    """E = Matlis dual of R, for Artinian R (the graded injective hull of k)."""
    return realize_finite(ring_as_module(rs)).matlis_dual()


def socle_dimension_of_ring(rs: RingSpec) -> int:
    return realize_finite(ring_as_module(rs)).socle_dimension()


# ---------------------------------------------------------------------------
# presenting a finite-length module over R

def present_finite(module: FiniteLengthModule, rs: RingSpec) -> ModulePresentation:
    """Graded presentation of a finite-length module (degrees required).

    Generators are basis elements chosen greedily outside m*M; relations are
    collected degree by degree, which is exhaustive once the degree passes the
    top of the module by one (beyond that every slice of the free cover is a
    radical multiple of the previous one).
    """
    p = module.p
    h = module.dim
    if h == 0:
        return ModulePresentation(rs.ring, rs.ideal, [], [], [])
    if module.degrees is None:
        raise ValueError("present_finite needs basis degrees")
    if module.nvars != rs.ring.n:
        raise ValueError("module and ring have different variable counts")
    order = sorted(range(h), key=lambda k: (module.degrees[k], k))
    span = module.radical_span()
    gens = []
    for k in order:
        unit = [0] * h
        unit[k] = 1
        if span.add(unit):
            gens.append(k)
    gen_degs = [module.degrees[k] for k in gens]
    t = len(gens)

    def pairs_at(d):
        out = []
        for g_idx, k in enumerate(gens):
            rem = d - module.degrees[k]
            if rem < 0:
                continue
            for m in rs.standard_monomials_of_degree(rem):
                out.append((g_idx, m))
        return out

    relations = []  # Vec over R^t
    rel_degs = []
    dmin = min(gen_degs)
    dmax = max(module.degrees) + 1
    for d in range(dmin, dmax + 1):
        pairs = pairs_at(d)
        if not pairs:
            continue
        cols = []
        for g_idx, m in pairs:
            unit = [0] * h
            unit[gens[g_idx]] = 1
            cols.append(module.act_monomial(unit, m))
        eval_mat = np.array(cols, dtype=np.int64).T % p
        ker = nullspace(eval_mat, p)
        if ker.shape[0] == 0:
            continue
        pair_index = {pm: i for i, pm in enumerate(pairs)}
        known = Subspace(len(pairs), p)
        for r_vec, r_deg in zip(relations, rel_degs):
            for mu in rs.standard_monomials_of_degree(d - r_deg):
                prod = [0] * len(pairs)
                for (g_idx, mm), c in r_vec.terms.items():
                    f = rs.nf(Polynomial._raw(p, rs.ring.n, {mono_mul(mm, mu): c}))
                    for m2, c2 in f.terms.items():
                        slot = pair_index[(g_idx, m2)]
                        prod[slot] = (prod[slot] + c2) % p
                known.add(prod)
        for row in ker:
            if known.add(list(row)):
                terms = {}
                for (g_idx, m), c in zip(pairs, row):
                    if c % p:
                        terms[(g_idx, m)] = int(c % p)
                relations.append(Vec._raw(p, rs.ring.n, terms))
                rel_degs.append(d)
    matrix = matrix_from_columns(relations, t, rs.ring)
    return ModulePresentation(rs.ring, rs.ideal, matrix, gen_degs, rel_degs)


# ---------------------------------------------------------------------------
# hom spaces and isomorphism testing

def hom_space(src: FiniteLengthModule, dst: FiniteLengthModule):
    """k-basis of module homomorphisms src -> dst, as (dst.dim, src.dim) arrays."""
    p = src.p
    hM, hN = src.dim, dst.dim
    if hM == 0 or hN == 0:
        return []
    if src.degrees is not None and dst.degrees is not None:
        return _hom_space_graded(src, dst)
    rows = []
    eyeM = np.eye(hM, dtype=np.int64)
    eyeN = np.eye(hN, dtype=np.int64)
    for a, b in zip(src.actions, dst.actions):
        rows.append((np.kron(eyeN, a.T) - np.kron(b, eyeM)) % p)
    big = np.vstack(rows) % p
    basis = nullspace(big, p)
    return [np.array(v, dtype=np.int64).reshape(hN, hM) % p for v in basis]


def _hom_space_graded(src: FiniteLengthModule, dst: FiniteLengthModule):
    """Hom basis assembled shift by shift (every hom splits into graded parts)."""
    p = src.p
    hM, hN = src.dim, dst.dim
    shifts = sorted({dst.degrees[i] - src.degrees[j] for i in range(hN) for j in range(hM)})
    out = []
    for s in shifts:
        unknowns = [
            (i, j)
            for i in range(hN)
            for j in range(hM)
            if dst.degrees[i] - src.degrees[j] == s
        ]
        if not unknowns:
            continue
        pos = {u: k for k, u in enumerate(unknowns)}
        eq_rows = []
        for v in range(src.nvars):
            A = src.actions[v]
            B = dst.actions[v]
            for i in range(hN):
                for j in range(hM):
                    if dst.degrees[i] - src.degrees[j] != s + 1:
                        continue
                    row = [0] * len(unknowns)
                    for k in range(hM):
                        if A[k, j] and (i, k) in pos:
                            row[pos[(i, k)]] = (row[pos[(i, k)]] + int(A[k, j])) % p
                    for k in range(hN):
                        if B[i, k] and (k, j) in pos:
                            row[pos[(k, j)]] = (row[pos[(k, j)]] - int(B[i, k])) % p
                    if any(row):
                        eq_rows.append(row)
        if eq_rows:
            basis = nullspace(np.array(eq_rows, dtype=np.int64) % p, p)
        else:
            basis = np.eye(len(unknowns), dtype=np.int64)
        for vec in basis:
            mat = np.zeros((hN, hM), dtype=np.int64)
            for (i, j), k in pos.items():
                mat[i, j] = vec[k] % p
            if mat.any():
                out.append(mat)
    return out


@dataclass(frozen=True)
class IsoResult:
    verdict: str  # "isomorphic" | "not_isomorphic" | "inconclusive"
    reason: str
    witness: object = None

    @property
    def decided(self) -> bool:
        return self.verdict != "inconclusive"

    def verdict_as_flag(self) -> str:
        if self.verdict == "isomorphic":
            return "true"
        if self.verdict == "not_isomorphic":
            return "false"
        return "inconclusive"


def _normalized_coefficient_vectors(p: int, d: int):
    """All length-d coefficient vectors with first nonzero entry 1."""
    from itertools import product

    for lead in range(d):
        for tail in product(range(p), repeat=d - lead - 1):
            yield (0,) * lead + (1,) + tail


def modules_isomorphic(
    src: FiniteLengthModule,
    dst: FiniteLengthModule,
    max_exhaust: int = 65536,
    trials: int = 500,
    seed: int = 0,
) -> IsoResult:
    """Decide src ≅ dst (as modules, grading ignored).

    Invariant mismatches refute; otherwise the hom space is searched for an
    invertible element, exhaustively when p^dim(Hom) is small and by seeded
    random sampling otherwise (random failure is only "inconclusive").
    """
    p = src.p
    if dst.p != p or dst.nvars != src.nvars:
        return IsoResult("not_isomorphic", "different ambient data")
    inv_s, inv_d = src.invariants(), dst.invariants()
    for key in ("length", "socle", "mingens", "loewy"):
        if inv_s[key] != inv_d[key]:
            return IsoResult(
                "not_isomorphic", f"invariant mismatch: {key} {inv_s[key]} vs {inv_d[key]}"
            )
    if src.dim == 0:
        return IsoResult("isomorphic", "both modules are zero", np.zeros((0, 0), dtype=np.int64))
    basis = hom_space(src, dst)
    if not basis:
        return IsoResult("not_isomorphic", "hom space is zero")
    d = len(basis)
    count = (p**d - 1) // (p - 1)
    if count <= max_exhaust:
        for coeffs in _normalized_coefficient_vectors(p, d):
            cand = sum(c * b for c, b in zip(coeffs, basis) if c) % p
            if is_invertible(cand, p):
                return IsoResult("isomorphic", "invertible homomorphism found", cand)
        return IsoResult(
            "not_isomorphic", f"no invertible map among all {count} hom classes"
        )
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        coeffs = rng.integers(0, p, size=d)
        if not coeffs.any():
            continue
        cand = sum(int(c) * b for c, b in zip(coeffs, basis)) % p
        if is_invertible(cand, p):
            return IsoResult("isomorphic", "invertible homomorphism found", cand)
    return IsoResult(
        "inconclusive",
        f"no invertible map in {trials} random samples from a {d}-dimensional hom space",
    )


# ---------------------------------------------------------------------------
# the depth-zero Frobenius test on injective hulls

@dataclass(frozen=True)
class ArtinianFrobeniusReport:
    """Outcome of comparing F^e(E) against powers of E for Artinian R.

    `iso` answers F(E) ≅ E (the weakly-FPI test); `injective` records whether
    F(E) ≅ E^n for some n (so F(E) stays injective), with the witnessing n.
    """

    iso: IsoResult
    injective: str  # "true" | "false" | "inconclusive"
    n_witness: object
    length_e: int
    length_fe: int
    socle_e: int
    socle_fe: int


def frobenius_fixes_injective_hull(
    rs: RingSpec,
    e: int = 1,
    max_exhaust: int = 65536,
    trials: int = 500,
    seed: int = 0,
) -> ArtinianFrobeniusReport:
    """Test F^e(E) ≅ E for Artinian R, E the injective hull of the residue field.

    E is realized as the Matlis dual of R, presented over R, pushed through
    the Frobenius functor, and realized again; the comparison is an honest
    module isomorphism test. F(E) ≅ E^n is also tested for the one n allowed
    by length counting, which decides whether F(E) remains injective.
    """
    e_mod = injective_hull_of_residue_field(rs)
    pres_e = present_finite(e_mod, rs)
    check = realize_finite(pres_e)
    if check.dim != e_mod.dim:
        raise PipelineInvariantError(
            f"presentation of E has length {check.dim}, expected {e_mod.dim}"
        )
    fe = realize_finite(frobenius_functor(pres_e, e))
    if fe.dim != e_mod.dim:
        iso = IsoResult(
            "not_isomorphic",
            f"length mismatch: λ(F^{e}E) = {fe.dim}, λ(E) = {e_mod.dim}",
        )
    else:
        iso = modules_isomorphic(e_mod, fe, max_exhaust=max_exhaust, trials=trials, seed=seed)
    if fe.dim == e_mod.dim:
        injective, n_witness = iso.verdict_as_flag(), (1 if iso.verdict == "isomorphic" else None)
    elif e_mod.dim == 0 or fe.dim % e_mod.dim:
        injective, n_witness = "false", None
    else:
        n = fe.dim // e_mod.dim
        power = direct_sum([e_mod] * n)
        sub = modules_isomorphic(power, fe, max_exhaust=max_exhaust, trials=trials, seed=seed)
        if sub.verdict == "isomorphic":
            injective, n_witness = "true", n
        elif sub.verdict == "not_isomorphic":
            injective, n_witness = "false", None
        else:
            injective, n_witness = "inconclusive", None
    return ArtinianFrobeniusReport(
        iso=iso,
        injective=injective,
        n_witness=n_witness,
        length_e=e_mod.dim,
        length_fe=fe.dim,
        socle_e=e_mod.socle_dimension(),
        socle_fe=fe.socle_dimension(),
    )
