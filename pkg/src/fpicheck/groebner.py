"""Buchberger engine and ideal arithmetic over F_p[x_1..x_n].

Ideals of a quotient ring R = S/I are always handled through their full
preimages in S (generators plus the defining ideal), so every operation in
this module works in the ambient polynomial ring.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import NonHomogeneousError, ResourceLimitError
from .gfpoly import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    PrimeField,
    elimination_order,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
    parse_polynomial,
    poly_to_string,
)

DEFAULT_MAX_PAIRS = 200_000


class PolyRing:
    """F_p[varnames] with a default display/computation order (grevlex)."""

    def __init__(self, p: int, varnames):
        self.field = PrimeField(p)
        self.p = p
        self.varnames = tuple(varnames)
        if len(set(self.varnames)) != len(self.varnames):
            raise ValueError("duplicate variable names")
        for name in self.varnames:
            if not name.isidentifier():
                raise ValueError(f"bad variable name {name!r}")
        self.n = len(self.varnames)

    def parse(self, text: str, **kw) -> Polynomial:
        return parse_polynomial(text, list(self.varnames), self.p, **kw)

    def show(self, f: Polynomial) -> str:
        return poly_to_string(f, list(self.varnames))

    def zero(self) -> Polynomial:
        return Polynomial.zero(self.p, self.n)

    def one(self) -> Polynomial:
        return Polynomial.constant(self.p, self.n, 1)

    def gen(self, i: int) -> Polynomial:
        return Polynomial.variable(self.p, self.n, i)

    def gens(self):
        return [self.gen(i) for i in range(self.n)]

    def linear_form(self, coeffs) -> Polynomial:
        terms = {}
        for i, c in enumerate(coeffs):
            c %= self.p
            if c:
                m = [0] * self.n
                m[i] = 1
                terms[tuple(m)] = c
        return Polynomial(self.p, self.n, terms)

    def extended(self, extra_names) -> "PolyRing":
        """New ring with extra variables prepended (for elimination)."""
        return PolyRing(self.p, tuple(extra_names) + self.varnames)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.p == self.p
            and other.varnames == self.varnames
        )

    def __hash__(self):
        return hash((self.p, self.varnames))

    def __repr__(self):
        return f"PolyRing(F_{self.p}[{', '.join(self.varnames)}])"


# ---------------------------------------------------------------------------
# division and Buchberger

def reduce_poly(f: Polynomial, basis, order: MonomialOrder) -> Polynomial:
    """Full normal form of f modulo the list `basis` (every term reduced)."""
    if f.is_zero() or not basis:
        return f
    p = f.p
    nvars = f.nvars
    leads = [(g.lead(order)[0], g) for g in basis if not g.is_zero()]
    work = dict(f.terms)
    out: dict = {}
    key = order.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        hit = None
        for lm, g in leads:
            if mono_divides(lm, m):
                hit = (lm, g)
                break
        if hit is None:
            out[m] = c
            continue
        lm, g = hit
        lc = g.terms[lm]
        factor = c * pow(lc, p - 2, p) % p
        shift = mono_div(m, lm)
        for mm, cc in g.terms.items():
            if mm == lm:
                continue
            mmm = mono_mul(mm, shift)
            v = (work.get(mmm, 0) - factor * cc) % p
            if v:
                work[mmm] = v
            else:
                work.pop(mmm, None)
    return Polynomial._raw(p, nvars, out)


def divide_exact(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """Quotient f/g for exact division; raises when g does not divide f."""
    p = f.p
    lm, lc = g.lead(order)
    lc_inv = pow(lc, p - 2, p)
    work = dict(f.terms)
    quot: dict = {}
    key = order.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if not mono_divides(lm, m):
            raise ValueError("division is not exact")
        shift = mono_div(m, lm)
        factor = c * lc_inv % p
        quot[shift] = factor
        for mm, cc in g.terms.items():
            if mm == lm:
                continue
            mmm = mono_mul(mm, shift)
            v = (work.get(mmm, 0) - factor * cc) % p
            if v:
                work[mmm] = v
            else:
                work.pop(mmm, None)
    return Polynomial(p, f.nvars, quot)


def _spoly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    p = f.p
    mf, cf = f.lead(order)
    mg, cg = g.lead(order)
    l = mono_lcm(mf, mg)
    a = f.mul_term(mono_div(l, mf), pow(cf, p - 2, p))
    b = g.mul_term(mono_div(l, mg), pow(cg, p - 2, p))
    return a - b


def buchberger(gens, order: MonomialOrder = GREVLEX, max_pairs: int = DEFAULT_MAX_PAIRS):
    """Reduced Groebner basis of the ideal generated by `gens`.

    Pairs are processed by increasing lcm degree; the coprime-lead and chain
    criteria discard pairs before reduction.
    """
    basis = [g for g in gens if not g.is_zero()]
    if not basis:
        return []
    order_key = order.key
    basis = [g.monic(order) for g in basis]
    basis.sort(key=lambda g: order_key(g.lead(order)[0]))
    leads = [g.lead(order)[0] for g in basis]

    pairq: list = []
    done = set()

    def push(i, j):
        l = mono_lcm(leads[i], leads[j])
        heapq.heappush(pairq, (mono_degree(l), order_key(l), i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    steps = 0
    while pairq:
        steps += 1
        if steps > max_pairs:
            raise ResourceLimitError("Buchberger pair budget exhausted")
        _, _, i, j = heapq.heappop(pairq)
        done.add((i, j))
        li, lj = leads[i], leads[j]
        l = mono_lcm(li, lj)
        if mono_mul(li, lj) == l:
            continue  # coprime leads: S-polynomial reduces to zero
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if mono_divides(leads[k], l):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in done and pjk in done:
                    skip = True
                    break
        if skip:
            continue
        s = reduce_poly(_spoly(basis[i], basis[j], order), basis, order)
        if s.is_zero():
            continue
        s = s.monic(order)
        basis.append(s)
        leads.append(s.lead(order)[0])
        new = len(basis) - 1
        for k in range(new):
            push(k, new)
    return _reduce_basis(basis, order)


def _reduce_basis(basis, order: MonomialOrder):
    """Minimalize then inter-reduce; output is the unique reduced basis, sorted."""
    leads = [g.lead(order)[0] for g in basis]
    keep = []
    for i, g in enumerate(basis):
        lm = leads[i]
        redundant = any(
            j != i and mono_divides(leads[j], lm) and (leads[j] != lm or j < i)
            for j in range(len(basis))
        )
        if not redundant:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = out + keep[i + 1 :]
        r = reduce_poly(g, others, order)
        if not r.is_zero():
            out.append(r.monic(order))
    out.sort(key=lambda g: order.key(g.lead(order)[0]))
    return out


# ---------------------------------------------------------------------------
# ideals

class Ideal:
    """An ideal of a PolyRing, with cached reduced Groebner bases per order."""

    def __init__(self, ring: PolyRing, generators):
        self.ring = ring
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring.parse(g)
            if g.p != ring.p or g.nvars != ring.n:
                raise ValueError("generator has the wrong ambient ring")
            if not g.is_zero():
                gens.append(g)
        self.generators = tuple(gens)
        self._gb: dict = {}

    def groebner_basis(self, order: MonomialOrder = GREVLEX, max_pairs: int = DEFAULT_MAX_PAIRS):
        key = (order.kind, order.block)
        got = self._gb.get(key)
        if got is None:
            got = tuple(buchberger(list(self.generators), order, max_pairs))
            self._gb[key] = got  # idempotent; concurrent recomputation is identical
        return got

    def normal_form(self, f: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
        return reduce_poly(f, list(self.groebner_basis(order)), order)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def is_zero(self) -> bool:
        return not self.groebner_basis()

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def lead_monomials(self, order: MonomialOrder = GREVLEX):
        return tuple(g.lead(order)[0] for g in self.groebner_basis(order))

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            return NotImplemented
        return self.groebner_basis() == other.groebner_basis()

    def __hash__(self):
        return hash((self.ring, self.groebner_basis()))

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.groebner_basis())

    def is_homogeneous_ideal(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __repr__(self):
        return "Ideal(" + ", ".join(self.ring.show(g) for g in self.generators) + ")"


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    return Ideal(a.ring, list(a.generators) + list(b.generators))

def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    gens = [f * g for f in a.generators for g in b.generators]
    return Ideal(a.ring, gens)

def multiply_ideal(f: Polynomial, a: Ideal) -> Ideal:
    return Ideal(a.ring, [f * g for g in a.generators])


def bracket_power(a: Ideal, e: int) -> Ideal:
    """The ideal generated by q-th powers of the generators, q = p^e."""
    if e < 0:
        raise ValueError("negative bracket power")
    if e == 0:
        return a
    return Ideal(a.ring, [g.frobenius_power(e) for g in a.generators])


def ideal_intersect(a: Ideal, b: Ideal) -> Ideal:
    """a ∩ b via a single auxiliary variable: eliminate t from t*a + (1-t)*b."""
    ring = a.ring
    big = ring.extended(("_t",))
    t = big.gen(0)
    one = big.one()
    gens = [t * g.extend(big.n, 1) for g in a.generators]
    gens += [(one - t) * g.extend(big.n, 1) for g in b.generators]
    gb = buchberger(gens, elimination_order(1))
    kept = []
    for g in gb:
        if all(m[0] == 0 for m in g.terms):
            kept.append(g.project(range(1, big.n)))
    return Ideal(ring, kept)


def _colon_single(a: Ideal, f: Polynomial) -> Ideal:
    """(a : f) = (a ∩ (f)) / f."""
    if f.is_zero():
        return Ideal(a.ring, [a.ring.one()])
    inter = ideal_intersect(a, Ideal(a.ring, [f]))
    return Ideal(a.ring, [divide_exact(g, f) for g in inter.generators])


def ideal_colon(a: Ideal, b: Ideal) -> Ideal:
    """(a : b) = {f : f*b ⊆ a}."""
    gens = [g for g in b.generators if not g.is_zero()]
    if not gens:
        return Ideal(a.ring, [a.ring.one()])
    out = _colon_single(a, gens[0])
    for g in gens[1:]:
        out = ideal_intersect(out, _colon_single(a, g))
    return out


def ideal_saturation(a: Ideal, b: Ideal, max_steps: int = 64) -> Ideal:
    """(a : b^∞) by iterating colons until stable (capped)."""
    cur = a
    for _ in range(max_steps):
        nxt = ideal_colon(cur, b)
        if nxt == cur:
            return cur
        cur = nxt
    raise ResourceLimitError("saturation did not stabilize within the step budget")


def in_radical(f: Polynomial, a: Ideal) -> bool:
    """f ∈ √a by the auxiliary-variable trick: 1 ∈ a + (1 - t*f)."""
    ring = a.ring
    big = ring.extended(("_t",))
    t = big.gen(0)
    gens = [g.extend(big.n, 1) for g in a.generators]
    gens.append(big.one() - t * f.extend(big.n, 1))
    gb = buchberger(gens, GREVLEX)
    return len(gb) == 1 and gb[0].is_constant()


# ---------------------------------------------------------------------------
# Hilbert data for monomial lead-term ideals

def _minimalize_monomials(monos):
    monos = sorted(set(monos), key=lambda m: (sum(m), m))
    out = []
    for m in monos:
        if not any(mono_divides(q, m) for q in out):
            out.append(m)
    return tuple(out)


def _zpoly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for da, ca in a.items():
        for db, cb in b.items():
            out[da + db] = out.get(da + db, 0) + ca * cb
    return {d: c for d, c in out.items() if c}

def _zpoly_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for d, c in b.items():
        v = out.get(d, 0) + c
        if v:
            out[d] = v
        else:
            out.pop(d, None)
    return out

def _zpoly_neg(a: dict) -> dict:
    return {d: -c for d, c in a.items()}

def _zpoly_shift(a: dict, k: int) -> dict:
    return {d + k: c for d, c in a.items()}


@lru_cache(maxsize=100_000)
def _hilbert_numerator_cached(gens: tuple, n: int) -> tuple:
    terms = _hilbert_numerator(gens, n)
    return tuple(sorted(terms.items()))


def _hilbert_numerator(gens: tuple, n: int) -> dict:
    """Numerator of Hilb(S/(gens)) over (1-t)^n, as {degree: int}."""
    gens = _minimalize_monomials(gens)
    if any(mono_is_one_t(m) for m in gens):
        return {}
    supports = [tuple(i for i, e in enumerate(m) if e) for m in gens]
    if all(len(s) == 1 for s in supports) and len({s[0] for s in supports}) == len(supports):
        out = {0: 1}
        for m in gens:
            out = _zpoly_mul(out, {0: 1, sum(m): -1})
        return out
    counts = [0] * n
    for s in supports:
        if len(s) > 1:
            for i in s:
                counts[i] += 1
    pivot = max(range(n), key=lambda i: counts[i])
    pv = tuple(1 if i == pivot else 0 for i in range(n))
    plus = _minimalize_monomials(gens + (pv,))
    colon = _minimalize_monomials(
        tuple(mono_div(m, pv) if m[pivot] else m for m in gens)
    )
    a = dict(_hilbert_numerator_cached(plus, n))
    b = dict(_hilbert_numerator_cached(colon, n))
    return _zpoly_add(a, _zpoly_shift(b, 1))


def mono_is_one_t(m) -> bool:
    return not any(m)


@dataclass(frozen=True)
class HilbertData:
    """Dimension, Hilbert series numerator (over (1-t)^dimension), colength.

    `colength` is None when the quotient has infinite length. The numerator
    evaluated at 1 is the multiplicity.
    """

    dimension: int
    numerator: tuple  # coefficient list, numerator[i] is the t^i coefficient
    colength: object  # int | None

    @property
    def multiplicity(self) -> int:
        return sum(self.numerator)

    def series_str(self) -> str:
        num = " + ".join(
            (f"{c}" if d == 0 else (f"{c}*t^{d}" if c != 1 else f"t^{d}"))
            for d, c in enumerate(self.numerator)
            if c
        ) or "0"
        if self.dimension <= 0:
            return num
        return f"({num})/(1-t)^{self.dimension}"


def hilbert_from_lead_monomials(lead_monos, n: int) -> HilbertData:
    terms = dict(_hilbert_numerator_cached(_minimalize_monomials(tuple(lead_monos)), n))
    if not terms:
        return HilbertData(dimension=-1, numerator=(0,), colength=0)
    # factor out (1 - t)^c
    coeffs = [0] * (max(terms) + 1)
    for d, c in terms.items():
        coeffs[d] = c
    c_power = 0
    while True:
        # synthetic division by (1 - t): q(t) = n(t)/(1-t) iff n(1) == 0
        if sum(coeffs) != 0:
            break
        q = [0] * (len(coeffs) - 1) if len(coeffs) > 1 else [0]
        acc = 0
        # n(t) = (1-t) q(t): q_i = sum_{j<=i} n_j
        for i in range(len(coeffs) - 1):
            acc += coeffs[i]
            q[i] = acc
        coeffs = q if q else [0]
        c_power += 1
        if coeffs == [0]:
            break
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    dim = n - c_power
    colength = sum(coeffs) if dim == 0 else None
    if dim < 0:
        dim, colength = 0, 0  # zero ring; callers treat colength 0 as empty
    return HilbertData(dimension=dim, numerator=tuple(coeffs), colength=colength)


def hilbert_data_of_ideal(a: Ideal) -> HilbertData:
    """Hilbert data of S/a, computed from the grevlex lead-term ideal."""
    return hilbert_from_lead_monomials(a.lead_monomials(), a.ring.n)


def minimal_primes_monomial(a: Ideal):
    """Minimal primes of a monomial ideal, as sorted tuples of variable indices.

    These are the minimal hitting sets of the generator supports. The zero
    ideal has the single minimal prime () (the zero ideal itself).
    """
    if not a.is_monomial():
        raise ValueError("minimal_primes_monomial needs a monomial ideal")
    gens = [g.lead(GREVLEX)[0] for g in a.groebner_basis()]
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in gens]
    if any(not s for s in supports):
        return []  # unit ideal
    n = a.ring.n
    hitting = []
    for mask in range(1 << n):
        cand = frozenset(i for i in range(n) if mask >> i & 1)
        if all(s & cand for s in supports):
            hitting.append(cand)
    minimal = [
        h for h in hitting if not any(o < h for o in hitting)
    ]
    return sorted(tuple(sorted(h)) for h in minimal)


# ---------------------------------------------------------------------------
# quotient rings

class RingSpec:
    """A standard graded quotient R = F_p[vars]/I with cached invariants.

    The irrelevant maximal ideal (all variables) plays the role of the maximal
    ideal of a complete local ring; reports note this working convention.
    """

    def __init__(self, p: int, varnames, ideal_gens, label: str = "", *, require_homogeneous: bool = True):
        self.ring = PolyRing(p, varnames)
        self.p = p
        self.label = label
        gens = []
        for g in ideal_gens:
            if isinstance(g, str):
                g = self.ring.parse(g)
            if g.is_zero():
                continue
            if require_homogeneous:
                if not g.is_homogeneous():
                    raise NonHomogeneousError(
                        f"generator {self.ring.show(g)} is not homogeneous"
                    )
                if g.degree() == 0:
                    raise NonHomogeneousError("constant generator makes the unit ideal")
            gens.append(g)
        self.ideal = Ideal(self.ring, gens)
        self.homogeneous = require_homogeneous
        self._hilbert = None
        self._std_cache: dict = {}

    @property
    def n(self) -> int:
        return self.ring.n

    def nf(self, f: Polynomial) -> Polynomial:
        return self.ideal.normal_form(f)

    def hilbert(self) -> HilbertData:
        if self._hilbert is None:
            self._hilbert = hilbert_data_of_ideal(self.ideal)
        return self._hilbert

    @property
    def dimension(self) -> int:
        return self.hilbert().dimension

    def maximal_ideal(self) -> Ideal:
        return Ideal(self.ring, self.ring.gens())

    def is_monomial(self) -> bool:
        return self.ideal.is_monomial()

    def quotient_by(self, extra_gens, label: str = "") -> "RingSpec":
        """R/(extra) as a new RingSpec over the same ambient ring."""
        gens = list(self.ideal.generators) + list(extra_gens)
        return RingSpec(
            self.p,
            self.ring.varnames,
            gens,
            label=label,
            require_homogeneous=self.homogeneous,
        )

    def standard_monomials_of_degree(self, d: int):
        """k-basis monomials of R_d (complement of the lead-term ideal)."""
        got = self._std_cache.get(d)
        if got is None:
            leads = self.ideal.lead_monomials()
            got = tuple(
                m for m in monomials_of_degree(self.n, d)
                if not any(mono_divides(l, m) for l in leads)
            )
            self._std_cache[d] = got
        return got

    def hf(self, d: int) -> int:
        """Hilbert function value dim_k R_d."""
        if d < 0:
            return 0
        return len(self.standard_monomials_of_degree(d))

    def coords_of(self, f: Polynomial, d: int, index: dict):
        """Coordinates of NF(f) in the degree-d standard monomial basis."""
        g = self.nf(f)
        coords = [0] * len(index)
        for m, c in g.terms.items():
            if sum(m) != d:
                raise ValueError("polynomial is not homogeneous of the slice degree")
            coords[index[m]] = c
        return coords

    def preimage_ideal(self, gens) -> Ideal:
        """Preimage in S of the R-ideal generated by `gens`."""
        return Ideal(self.ring, list(gens) + list(self.ideal.generators))

    def ideal_eq_in_r(self, gens_a, gens_b) -> bool:
        return self.preimage_ideal(gens_a) == self.preimage_ideal(gens_b)

    def is_nzd(self, f: Polynomial) -> bool:
        """Is f a non-zero-divisor on R? Checked via (I : f) == I."""
        if self.nf(f).is_zero():
            return False
        return ideal_colon(self.ideal, Ideal(self.ring, [f])) == self.ideal

    def __repr__(self):
        gens = ", ".join(self.ring.show(g) for g in self.ideal.generators) or "0"
        return f"RingSpec(F_{self.p}[{','.join(self.ring.varnames)}]/({gens}))"
