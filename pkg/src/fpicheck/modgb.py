"""Groebner machinery for submodules of free modules over F_p[x_1..x_n].

Elements of a free module S^r are sparse vectors whose terms are keyed by
(component, monomial). The only order used is position-over-term with grevlex
ties: lower component indices dominate, so placing "real" components before
tag components turns a Groebner basis into an elimination device for syzygies.

The coprime-lead shortcut for S-pairs is valid for ideals only, so the module
Buchberger loop applies just the chain criterion.
"""

from __future__ import annotations

import heapq

from .errors import ResourceLimitError
from .gfpoly import (
    GREVLEX,
    Polynomial,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
)
from .groebner import (
    DEFAULT_MAX_PAIRS,
    _hilbert_numerator_cached,
    _minimalize_monomials,
)


def pot_key(term):
    """Sort key for (component, monomial): position over term, grevlex ties."""
    comp, mono = term
    return (-comp, GREVLEX.key(mono))


class Vec:
    """Sparse element of a free module S^r; terms map (comp, mono) to coeff."""

    __slots__ = ("p", "nvars", "terms")

    def __init__(self, p: int, nvars: int, terms: dict):
        self.p = p
        self.nvars = nvars
        self.terms = {t: c % p for t, c in terms.items() if c % p}

    @classmethod
    def _raw(cls, p: int, nvars: int, terms: dict) -> "Vec":
        v = object.__new__(cls)
        v.p = p
        v.nvars = nvars
        v.terms = terms
        return v

    @classmethod
    def zero(cls, p: int, nvars: int) -> "Vec":
        return cls._raw(p, nvars, {})

    @classmethod
    def unit(cls, p: int, nvars: int, comp: int) -> "Vec":
        return cls._raw(p, nvars, {(comp, (0,) * nvars): 1})

    @classmethod
    def from_polys(cls, entries) -> "Vec":
        """Build from an iterable of (component, Polynomial) pairs."""
        p = nvars = None
        terms: dict = {}
        for comp, f in entries:
            if f is None or f.is_zero():
                continue
            p, nvars = f.p, f.nvars
            for m, c in f.terms.items():
                t = (comp, m)
                v = (terms.get(t, 0) + c) % p
                if v:
                    terms[t] = v
                else:
                    terms.pop(t, None)
        if p is None:
            raise ValueError("from_polys needs at least one nonzero entry")
        return cls._raw(p, nvars, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def component(self, comp: int) -> Polynomial:
        terms = {m: c for (cc, m), c in self.terms.items() if cc == comp}
        return Polynomial._raw(self.p, self.nvars, terms)

    def components(self):
        return sorted({c for c, _ in self.terms})

    def as_poly_dict(self) -> dict:
        out: dict = {}
        for (comp, m), c in self.terms.items():
            out.setdefault(comp, {})[m] = c
        return {
            comp: Polynomial._raw(self.p, self.nvars, terms)
            for comp, terms in out.items()
        }

    def __add__(self, other: "Vec") -> "Vec":
        terms = dict(self.terms)
        for t, c in other.terms.items():
            v = (terms.get(t, 0) + c) % self.p
            if v:
                terms[t] = v
            else:
                terms.pop(t, None)
        return Vec._raw(self.p, self.nvars, terms)

    def __sub__(self, other: "Vec") -> "Vec":
        terms = dict(self.terms)
        for t, c in other.terms.items():
            v = (terms.get(t, 0) - c) % self.p
            if v:
                terms[t] = v
            else:
                terms.pop(t, None)
        return Vec._raw(self.p, self.nvars, terms)

    def __neg__(self) -> "Vec":
        return Vec._raw(self.p, self.nvars, {t: self.p - c for t, c in self.terms.items()})

    def scale(self, c: int) -> "Vec":
        c %= self.p
        if c == 0:
            return Vec.zero(self.p, self.nvars)
        return Vec._raw(self.p, self.nvars, {t: c * v % self.p for t, v in self.terms.items()})

    def mul_term(self, mono, coeff: int) -> "Vec":
        coeff %= self.p
        if coeff == 0:
            return Vec.zero(self.p, self.nvars)
        return Vec._raw(
            self.p,
            self.nvars,
            {(c, mono_mul(m, mono)): coeff * v % self.p for (c, m), v in self.terms.items()},
        )

    def mul_poly(self, f: Polynomial) -> "Vec":
        out = Vec.zero(self.p, self.nvars)
        for m, c in f.terms.items():
            out = out + self.mul_term(m, c)
        return out

    def lead(self, key=pot_key):
        t = max(self.terms, key=key)
        return t, self.terms[t]

    def monic(self, key=pot_key) -> "Vec":
        _, c = self.lead(key)
        return self.scale(pow(c, self.p - 2, self.p))

    def shift_components(self, offset: int) -> "Vec":
        return Vec._raw(
            self.p, self.nvars, {(c + offset, m): v for (c, m), v in self.terms.items()}
        )

    def restrict_components(self, lo: int, hi: int) -> "Vec":
        """Keep components in [lo, hi), renumbered to start at 0."""
        return Vec._raw(
            self.p,
            self.nvars,
            {(c - lo, m): v for (c, m), v in self.terms.items() if lo <= c < hi},
        )

    def degree_with_twists(self, twists) -> int:
        """Degree if homogeneous for the given component twists; raises otherwise."""
        degs = {mono_degree(m) + twists[c] for c, m in self.terms}
        if len(degs) > 1:
            raise ValueError("vector is not homogeneous for the given twists")
        return degs.pop() if degs else -1

    def __eq__(self, other):
        return (
            isinstance(other, Vec)
            and other.p == self.p
            and other.nvars == self.nvars
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.p, self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        parts = [f"e{c}*{m}:{v}" for (c, m), v in sorted(self.terms.items())]
        return "Vec(" + ", ".join(parts) + ")"


# ---------------------------------------------------------------------------
# reduction and Buchberger for modules

def reduce_vec(v: Vec, basis, key=pot_key) -> Vec:
    """Full normal form of v modulo the vectors in `basis`."""
    if v.is_zero() or not basis:
        return v
    p = v.p
    buckets: dict = {}
    for g in basis:
        if g.is_zero():
            continue
        (comp, mono), _ = g.lead(key)
        buckets.setdefault(comp, []).append((mono, g))
    work = dict(v.terms)
    out: dict = {}
    while work:
        t = max(work, key=key)
        coef = work.pop(t)
        comp, mono = t
        hit = None
        for lm, g in buckets.get(comp, ()):
            if mono_divides(lm, mono):
                hit = (lm, g)
                break
        if hit is None:
            out[t] = coef
            continue
        lm, g = hit
        lc = g.terms[(comp, lm)]
        factor = coef * pow(lc, p - 2, p) % p
        shift = mono_div(mono, lm)
        for (c2, m2), cc in g.terms.items():
            if c2 == comp and m2 == lm:
                continue
            tt = (c2, mono_mul(m2, shift))
            val = (work.get(tt, 0) - factor * cc) % p
            if val:
                work[tt] = val
            else:
                work.pop(tt, None)
    return Vec._raw(p, v.nvars, out)


def _svec(f: Vec, g: Vec, key=pot_key) -> Vec:
    p = f.p
    (cf, mf), af = f.lead(key)
    (cg, mg), ag = g.lead(key)
    l = mono_lcm(mf, mg)
    a = f.mul_term(mono_div(l, mf), pow(af, p - 2, p))
    b = g.mul_term(mono_div(l, mg), pow(ag, p - 2, p))
    return a - b


def module_groebner(gens, key=pot_key, max_pairs: int = DEFAULT_MAX_PAIRS, syzygy_cutoff=None):
    """Reduced Groebner basis of the submodule generated by `gens`.

    With `syzygy_cutoff` set, pairs between two elements whose leads lie at or
    beyond that component are skipped. Elements there are pure combinations of
    tag components; their mutual pairs only rewrite syzygies already generated
    (Schreyer), so the output still generates the same submodule and is a full
    Groebner basis below the cutoff.
    """
    basis = [g.monic(key) for g in gens if not g.is_zero()]
    if not basis:
        return []
    basis.sort(key=lambda g: key(g.lead(key)[0]))
    leads = [g.lead(key)[0] for g in basis]

    pairq: list = []
    done = set()

    def push(i, j):
        ci, mi = leads[i]
        cj, mj = leads[j]
        if ci != cj:
            return
        if syzygy_cutoff is not None and ci >= syzygy_cutoff:
            return
        l = mono_lcm(mi, mj)
        heapq.heappush(pairq, (mono_degree(l), key((ci, l)), i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    steps = 0
    while pairq:
        steps += 1
        if steps > max_pairs:
            raise ResourceLimitError("module Buchberger pair budget exhausted")
        _, _, i, j = heapq.heappop(pairq)
        done.add((i, j))
        (ci, mi) = leads[i]
        (_, mj) = leads[j]
        l = mono_lcm(mi, mj)
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            ck, mk = leads[k]
            if ck == ci and mono_divides(mk, l):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in done and pjk in done:
                    skip = True
                    break
        if skip:
            continue
        s = reduce_vec(_svec(basis[i], basis[j], key), basis, key)
        if s.is_zero():
            continue
        s = s.monic(key)
        basis.append(s)
        leads.append(s.lead(key)[0])
        new = len(basis) - 1
        for k in range(new):
            push(k, new)
    return _reduce_vec_basis(basis, key)


def _reduce_vec_basis(basis, key=pot_key):
    leads = [g.lead(key)[0] for g in basis]
    keep = []
    for i, g in enumerate(basis):
        ci, mi = leads[i]
        redundant = any(
            j != i
            and leads[j][0] == ci
            and mono_divides(leads[j][1], mi)
            and (leads[j][1] != mi or j < i)
            for j in range(len(basis))
        )
        if not redundant:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = out + keep[i + 1 :]
        r = reduce_vec(g, others, key)
        if not r.is_zero():
            out.append(r.monic(key))
    out.sort(key=lambda g: key(g.lead(key)[0]))
    return out


# ---------------------------------------------------------------------------
# syzygies and kernels

def syzygy_basis(columns, nreal: int, max_pairs: int = DEFAULT_MAX_PAIRS):
    """Generators of the syzygy module of `columns` (vectors in S^nreal).

    Each column v_i is augmented with a tag component nreal+i; Groebner basis
    elements with no term in the first nreal components record syzygies.
    """
    cols = list(columns)
    if not cols:
        return []
    p = cols[0].p
    nvars = cols[0].nvars
    one = (0,) * nvars
    aug = []
    for i, v in enumerate(cols):
        terms = dict(v.terms)
        terms[(nreal + i, one)] = 1
        aug.append(Vec._raw(p, nvars, terms))
    gb = module_groebner(aug, max_pairs=max_pairs, syzygy_cutoff=nreal)
    out = []
    for g in gb:
        if all(c >= nreal for c, _ in g.terms):
            out.append(g.restrict_components(nreal, nreal + len(cols)))
    return out


def module_contains(v: Vec, gens, max_pairs: int = DEFAULT_MAX_PAIRS) -> bool:
    gb = module_groebner(list(gens), max_pairs=max_pairs)
    return reduce_vec(v, gb).is_zero()


def vec_nf_mod_ideal(v: Vec, ideal) -> Vec:
    """Entrywise normal form of v modulo an Ideal of the coefficient ring."""
    entries = []
    for comp, f in v.as_poly_dict().items():
        g = ideal.normal_form(f)
        if not g.is_zero():
            entries.append((comp, g))
    if not entries:
        return Vec.zero(v.p, v.nvars)
    return Vec.from_polys(entries)


def kernel_over_quotient(columns, nrows: int, defining_ideal, max_pairs: int = DEFAULT_MAX_PAIRS):
    """Generators of ker(R^s -> R^r) for R = S/I, columns giving the map.

    The columns live in S^nrows; the kernel is computed by adjoining I*e_j
    columns in S, taking syzygies, and projecting onto the first s tags.
    """
    cols = list(columns)
    s = len(cols)
    if s == 0:
        return []
    p = cols[0].p
    nvars = cols[0].nvars
    aug = list(cols)
    for j in range(nrows):
        for g in defining_ideal.generators:
            aug.append(Vec._raw(p, nvars, {(j, m): c for m, c in g.terms.items()}))
    syz = syzygy_basis(aug, nrows, max_pairs=max_pairs)
    seen = set()
    out = []
    for w in syz:
        v = vec_nf_mod_ideal(w.restrict_components(0, s), defining_ideal)
        if v.is_zero() or v in seen:
            continue
        seen.add(v)
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# lead modules, Hilbert data for graded quotients of free modules

def lead_module(gb, key=pot_key) -> dict:
    """Map component -> minimal generators of its lead-monomial ideal."""
    raw: dict = {}
    for g in gb:
        (comp, mono), _ = g.lead(key)
        raw.setdefault(comp, []).append(mono)
    return {c: _minimalize_monomials(tuple(ms)) for c, ms in raw.items()}


def quotient_module_numerator(lead_by_comp: dict, twists, n: int) -> dict:
    """Laurent numerator over (1-t)^n of Hilb(F/N), F = free with twists.

    Component j contributes t^twist_j times the numerator of S/(leads_j).
    """
    total: dict = {}
    for j, tw in enumerate(twists):
        leads = _minimalize_monomials(tuple(lead_by_comp.get(j, ())))
        num = dict(_hilbert_numerator_cached(leads, n))
        for d, c in num.items():
            v = total.get(d + tw, 0) + c
            if v:
                total[d + tw] = v
            else:
                total.pop(d + tw, None)
    return total


def module_standard_monomials(lead_by_comp: dict, twists, n: int, degree: int):
    """Terms (comp, mono) of degree `degree` outside the lead module."""
    out = []
    for j, tw in enumerate(twists):
        d = degree - tw
        if d < 0:
            continue
        leads = lead_by_comp.get(j, ())
        for m in monomials_of_degree(n, d):
            if not any(mono_divides(l, m) for l in leads):
                out.append((j, m))
    return out


def lead_module_is_finite_colength(lead_by_comp: dict, ncomponents: int, n: int) -> bool:
    """Does every component's lead ideal contain a power of every variable?"""
    for j in range(ncomponents):
        leads = lead_by_comp.get(j, ())
        for v in range(n):
            if not any(
                m[v] and all(e == 0 for i, e in enumerate(m) if i != v) for m in leads
            ):
                return False
    return True
