"""Module Groebner bases, syzygies, free resolutions, Frobenius homology."""

import random

import pytest

from fpicheck.artinian import realize_finite, ring_as_module
from fpicheck.gfpoly import GREVLEX, Polynomial, random_homogeneous
from fpicheck.groebner import Ideal, PolyRing, RingSpec
from fpicheck.modgb import (
    Vec,
    kernel_over_quotient,
    module_contains,
    syzygy_basis,
    vec_nf_mod_ideal,
)
from fpicheck.resolutions import (
    ModulePresentation,
    annihilator_is_zero,
    canonical_module,
    frobenius_functor,
    hom_into_ring_generators,
    hom_presentation_generic,
    is_free_rank_one,
    minimal_free_resolution,
    resolve_presentation,
    ring_depth,
    syzygy_presentation,
    tor_frobenius,
    with_modulus,
)


def flagship(p=2):
    return RingSpec(p, ["x", "y", "z"], ["x*y", "x*z", "y*z"])


def cyclic_presentation(rs, gens):
    """R/(gens) as a module over R, one generator in degree zero."""
    polys = [rs.ring.parse(g) if isinstance(g, str) else g for g in gens]
    matrix = [[rs.nf(f) for f in polys]]
    return ModulePresentation(
        rs.ring, rs.ideal, matrix, (0,), tuple(f.degree() for f in polys)
    )


def residue_field(rs):
    return cyclic_presentation(rs, [rs.ring.gen(i) for i in range(rs.n)])


def column(ring, *texts):
    return Vec.from_polys(
        (i, ring.parse(t)) for i, t in enumerate(texts) if t != "0"
    )


# -- syzygies over the polynomial ring ------------------------------------------


def test_koszul_syzygy_of_two_variables():
    ring = PolyRing(2, ["x", "y"])
    cols = [column(ring, "x"), column(ring, "y")]
    syz = syzygy_basis(cols, nreal=1)
    assert len(syz) == 1
    want = Vec.from_polys([(0, ring.parse("y")), (1, ring.parse("x"))])
    assert syz[0].terms == want.terms  # char 2: y*e0 - x*e1 = y*e0 + x*e1


def test_flagship_generators_have_two_syzygies():
    ring = PolyRing(2, ["x", "y", "z"])
    cols = [column(ring, t) for t in ("x*y", "x*z", "y*z")]
    syz = syzygy_basis(cols, nreal=1)
    mat = [[f for f in ("x*y", "x*z", "y*z")]]
    pres = ModulePresentation(
        ring, None, [[ring.parse(t) for t in mat[0]]], (0,), (2, 2, 2)
    )
    first = syzygy_presentation(pres)
    assert first.nrows == 3
    assert len(first.col_twists) == 2
    # every syzygy really kills the generators
    for v in first.columns():
        combo = Polynomial.zero(2, 3)
        parts = v.as_poly_dict()
        for i, t in enumerate(("x*y", "x*z", "y*z")):
            if i in parts:
                combo = combo + parts[i] * ring.parse(t)
        assert combo.is_zero()


def test_syzygy_of_regular_sequence_is_koszul_only():
    ring = PolyRing(3, ["x", "y"])
    cols = [column(ring, "x^2"), column(ring, "y^3")]
    syz = syzygy_basis(cols, nreal=1)
    assert len(syz) == 1
    v = syz[0].as_poly_dict()
    assert v[0] * ring.parse("x^2") + v[1] * ring.parse("y^3") == Polynomial.zero(3, 2)


def test_module_contains_and_nf():
    ring = PolyRing(2, ["x", "y"])
    gens = [column(ring, "x", "y"), column(ring, "0", "x + y")]
    target = Vec.from_polys([(0, ring.parse("x"))]).mul_term((0, 0), 1)
    assert not module_contains(target, gens)
    combo = gens[0] + gens[1]
    assert module_contains(combo, gens)
    a = Ideal(ring, [ring.parse("x^2")])
    v = Vec.from_polys([(0, ring.parse("x^3 + y"))])
    assert vec_nf_mod_ideal(v, a).component(0) == ring.parse("y")


def test_kernel_over_quotient_hypersurface():
    rs = RingSpec(2, ["x"], ["x^2"])
    cols = [column(rs.ring, "x")]
    ker = kernel_over_quotient(cols, nrows=1, defining_ideal=rs.ideal)
    assert ker
    gen = ker[0].component(0)
    assert rs.nf(gen) == rs.ring.parse("x")


# -- minimal free resolutions ------------------------------------------------------


def test_flagship_betti_numbers():
    res = minimal_free_resolution(flagship())
    assert res.betti() == (1, 3, 2)
    assert res.length == 2


def test_hypersurface_betti_numbers():
    res = minimal_free_resolution(RingSpec(3, ["x", "y"], ["x*y"]))
    assert res.betti() == (1, 1)
    assert res.twists[1] == (2,)


def test_regular_ring_resolves_instantly():
    res = minimal_free_resolution(RingSpec(2, ["x", "y"], []))
    assert res.betti() == (1,)
    assert res.length == 0


def test_resolution_is_a_complex_and_minimal():
    rng = random.Random(13)
    for p in (2, 3):
        for _ in range(4):
            gens = [
                random_homogeneous(rng, p, 3, rng.randint(1, 3)) for _ in range(2)
            ]
            gens = [g for g in gens if not g.is_zero()]
            if not gens:
                continue
            rs = RingSpec(p, ["x", "y", "z"], gens)
            res = minimal_free_resolution(rs)
            for k in range(1, res.length):
                a = res.map_matrix(k)
                b = res.map_matrix(k + 1)
                rows, mid, cols = len(a), len(b), len(b[0]) if b else 0
                for i in range(rows):
                    for j in range(cols):
                        acc = Polynomial.zero(p, 3)
                        for t in range(mid):
                            acc = acc + a[i][t] * b[t][j]
                        assert acc.is_zero()
            for k in range(1, res.length + 1):
                for row in res.map_matrix(k):
                    for f in row:
                        assert f.is_zero() or f.degree() >= 1


@pytest.mark.parametrize(
    "gens,depth", [(["x*y", "x*z", "y*z"], 1), (["x^2", "x*y"], 0)]
)
def test_ring_depth_examples(gens, depth):
    nvars = 3 if len(gens) == 3 else 2
    rs = RingSpec(2, ["x", "y", "z"][:nvars], gens)
    assert ring_depth(rs) == depth


def test_depth_of_regular_ring_is_dimension():
    rs = RingSpec(5, ["x", "y"], [])
    assert ring_depth(rs) == 2


# -- Frobenius functor ---------------------------------------------------------------


def test_frobenius_of_residue_field_over_dual_numbers():
    rs = RingSpec(2, ["x"], ["x^2"])
    k = residue_field(rs)
    fk = frobenius_functor(k, 1).nf_entries()
    # x^2 dies in R, so F(k) = R/(x^2) = R is free of rank one
    assert all(f.is_zero() for row in fk.matrix for f in row)
    assert realize_finite(fk).dim == 2


def test_frobenius_functor_scales_twists():
    rs = flagship(3)
    k = residue_field(rs)
    fk = frobenius_functor(k, 1)
    assert fk.col_twists == (3, 3, 3)
    assert fk.matrix[0][0] == rs.ring.parse("x^3")


def test_frobenius_composition_at_finite_length():
    rs = RingSpec(2, ["x", "y"], ["x^2", "x*y", "y^3"])
    m = cyclic_presentation(rs, ["x", "y^2"])
    once_twice = frobenius_functor(frobenius_functor(m, 1), 1)
    direct = frobenius_functor(m, 2)
    a = realize_finite(once_twice.nf_entries())
    b = realize_finite(direct.nf_entries())
    assert a.invariants() == b.invariants()


def test_frobenius_preserves_finite_length():
    rng = random.Random(29)
    rs = RingSpec(3, ["x", "y"], ["x^3", "y^3", "x*y^2"])
    for _ in range(5):
        extra = random_homogeneous(rng, 3, 2, rng.randint(1, 2))
        m = cyclic_presentation(rs, [rs.nf(extra)]) if not extra.is_zero() else residue_field(rs)
        fm = frobenius_functor(m, 1)
        realized = realize_finite(fm.nf_entries())
        assert realized.dim < 100


def test_differentials_stay_composable_after_frobenius():
    rs = flagship()
    res = resolve_presentation(residue_field(rs), max_steps=2)
    if res.length >= 2:
        a = [[f.frobenius_power(1) for f in row] for row in res.map_matrix(1)]
        b = [[f.frobenius_power(1) for f in row] for row in res.map_matrix(2)]
        for i in range(len(a)):
            for j in range(len(b[0])):
                acc = Polynomial.zero(2, 3)
                for t in range(len(b)):
                    acc = acc + a[i][t] * b[t][j]
                assert rs.nf(acc).is_zero()


# -- Tor against Frobenius -------------------------------------------------------------


@pytest.mark.parametrize("p", [2, 3, 5])
def test_regular_ring_has_flat_frobenius(p):
    rs = RingSpec(p, ["x", "y"], [])
    k = residue_field(rs)
    for i in (1, 2):
        t = tor_frobenius(rs, k, i)
        assert t.dim == 0


def test_tor_one_detects_the_singularity():
    rs = RingSpec(2, ["x"], ["x^2"])
    t = tor_frobenius(rs, residue_field(rs), 1)
    assert t.dim == 2


def test_tor_zero_agrees_with_the_functor():
    rs = RingSpec(2, ["x", "y"], ["x^2", "y^2"])
    m = cyclic_presentation(rs, ["x"])
    t0 = tor_frobenius(rs, m, 0)
    direct = realize_finite(frobenius_functor(m, 1).nf_entries())
    assert t0.invariants() == direct.invariants()


def test_tor_vanishes_beyond_the_resolution():
    rs = RingSpec(2, ["x", "y"], [])
    m = cyclic_presentation(rs, ["x^2", "y^2"])
    t = tor_frobenius(rs, m, 2)
    assert t.dim == 0


# -- canonical modules and Hom into the ring ----------------------------------------------


def test_canonical_module_of_hypersurface_is_free():
    rs = RingSpec(2, ["x", "y"], ["x*y"])
    omega = canonical_module(rs)
    flag, twist = is_free_rank_one(omega)
    assert flag


def test_canonical_module_of_flagship_needs_two_generators():
    omega = canonical_module(flagship())
    assert omega.minimized().nrows == 2


def test_canonical_generators_have_zero_annihilator():
    rs = flagship()
    omega = canonical_module(rs)
    homs = hom_into_ring_generators(omega)
    assert homs
    # the canonical module of a 1-dimensional CM ring embeds into R:
    # any embedding image is an ideal whose elements include a nonzerodivisor
    for vec, _deg in homs[:1]:
        assert not all(
            rs.nf(f).is_zero() for f in vec.as_poly_dict().values()
        )


def test_hom_into_ring_vanishes_for_torsion():
    rs = flagship()
    # R/(x + y + z) is torsion: the class of a nonzerodivisor kills it
    m = cyclic_presentation(rs, ["x + y + z"])
    assert hom_into_ring_generators(m) == []


def test_annihilator_checks():
    rs = flagship()
    one = Vec.unit(2, 3, 0)
    assert annihilator_is_zero(rs, one)
    xonly = Vec.from_polys([(0, rs.ring.parse("x"))])
    assert not annihilator_is_zero(rs, xonly)


def test_with_modulus_moves_to_smaller_quotient():
    rs = flagship()
    rq = rs.quotient_by([rs.ring.parse("x + y + z")])
    m = cyclic_presentation(rs, ["x"])
    moved = with_modulus(m, rq.ideal)
    assert moved.modulus == rq.ideal
    # R/(x+y+z, x) = k[y]/(y^2) has k-dimension 2
    assert realize_finite(moved).dim == 2


# -- generic Hom ----------------------------------------------------------------------


def test_hom_ring_to_ring_is_free_rank_one():
    rs = RingSpec(2, ["x"], ["x^3"])
    r = ring_as_module(rs)
    h = hom_presentation_generic(r, r)
    flag, twist = is_free_rank_one(h)
    assert flag and twist == 0


def test_hom_residue_field_to_itself():
    rs = RingSpec(3, ["x", "y"], ["x^2", "x*y", "y^2"])
    k = residue_field(rs)
    h = hom_presentation_generic(k, k)
    assert realize_finite(h.nf_entries()).dim == 1


def test_hom_residue_field_into_positive_depth_ring_is_zero():
    rs = flagship()
    k = residue_field(rs)
    h = hom_presentation_generic(k, ring_as_module(rs))
    assert realize_finite(h.nf_entries()).dim == 0
