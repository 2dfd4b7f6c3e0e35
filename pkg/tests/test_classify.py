"""Verdict layer: nonzerodivisors, Gorenstein, F-purity, canonical ideals."""

import pytest

from fpicheck.artinian import frobenius_fixes_injective_hull
from fpicheck.classify import (
    canonical_ideal,
    classify_ring,
    find_nzds,
    ideals_isomorphic,
    is_f_pure,
    is_gorenstein,
    minimal_ideal_generators,
    minimal_prime_count,
    monomial_generically_gorenstein,
    report_is_decisive,
)
from fpicheck.errors import (
    NoNzdFoundError,
    NotCohenMacaulayError,
    UnsupportedDimensionError,
)
from fpicheck.groebner import Ideal, RingSpec, bracket_power, ideal_colon
from fpicheck.resolutions import ring_depth


def flagship(p=2):
    return RingSpec(p, ["x", "y", "z"], ["x*y", "x*z", "y*z"])


def coordinate_cross(p=2):
    return RingSpec(p, ["x", "y"], ["x*y"])


# -- nonzerodivisor search ----------------------------------------------------


def test_flagship_linear_nzd():
    rs = flagship()
    found = find_nzds(rs, count=1)
    assert found[0] == rs.ring.parse("x + y + z")
    assert rs.is_nzd(found[0])


@pytest.mark.parametrize("p", [2, 3, 5])
def test_found_nzds_are_verified_and_distinct(p):
    rs = flagship(p)
    found = find_nzds(rs, count=2, seed=1)
    assert len(found) == 2
    assert found[0] != found[1]
    for f in found:
        assert rs.is_nzd(f)


def test_depth_zero_ring_has_no_nzd():
    rs = RingSpec(2, ["x", "y"], ["x^2", "x*y"])
    with pytest.raises(NoNzdFoundError):
        find_nzds(rs, count=1, max_degree=2)


def test_cross_skips_axis_zerodivisors():
    # x and y each kill a branch of k[x,y]/(xy); x + y misses both branches
    rs = coordinate_cross(2)
    found = find_nzds(rs, count=1)
    assert found[0] == rs.ring.parse("x + y")
    assert rs.is_nzd(found[0])


# -- Gorenstein ---------------------------------------------------------------------


@pytest.mark.parametrize("p", [2, 3])
def test_cross_is_gorenstein(p):
    rs = coordinate_cross(p)
    flag, witness = is_gorenstein(rs)
    assert flag
    assert witness["socle_dimension"] == 1


def test_flagship_is_not_gorenstein():
    flag, witness = is_gorenstein(flagship())
    assert not flag
    assert witness["socle_dimension"] == 2
    assert witness["last_betti_number"] == 2


def test_artinian_gorenstein_cases():
    flag, _ = is_gorenstein(RingSpec(2, ["x"], ["x^2"]))
    assert flag
    flag, _ = is_gorenstein(RingSpec(2, ["x", "y"], ["x^2", "x*y", "y^2"]))
    assert not flag


def test_depth_zero_is_not_gorenstein_in_dim_one():
    flag, witness = is_gorenstein(RingSpec(2, ["x", "y"], ["x^2", "x*y"]))
    assert not flag
    assert "depth" in str(witness)


def test_gorenstein_is_parameter_independent():
    rs = flagship(3)
    candidates = find_nzds(rs, count=2, seed=5)
    one, _ = is_gorenstein(rs, nzds=[candidates[0]])
    other, _ = is_gorenstein(rs, nzds=[candidates[1]])
    assert one == other is False


# -- F-purity ----------------------------------------------------------------------


@pytest.mark.parametrize("p", [2, 3, 5])
def test_flagship_is_f_pure(p):
    rs = flagship(p)
    flag, witness = is_f_pure(rs)
    assert flag
    w = witness["splitting_witness"]
    mono = rs.ring.parse(w) if isinstance(w, str) else w
    mp = bracket_power(rs.maximal_ideal(), 1)
    assert not mp.contains(mono)
    colon = ideal_colon(bracket_power(rs.ideal, 1), rs.ideal)
    assert colon.contains(mono)


def test_cusp_is_not_f_pure_at_p_three():
    rs = RingSpec(
        3, ["x", "y"], ["y^2 - x^3"], require_homogeneous=False
    )
    flag, witness = is_f_pure(rs)
    assert not flag
    # the whole colon ideal lands inside the bracket of the maximal ideal
    mp = bracket_power(rs.maximal_ideal(), 1)
    colon = ideal_colon(bracket_power(rs.ideal, 1), rs.ideal)
    for g in colon.groebner_basis():
        assert mp.contains(g)
    # and the square of the defining equation is the dominant colon generator
    f = rs.ring.parse("y^2 - x^3")
    assert colon.contains(f * f)


def test_non_reduced_ring_is_not_f_pure():
    flag, _ = is_f_pure(RingSpec(2, ["x"], ["x^2"]))
    assert not flag


@pytest.mark.parametrize("p", [2, 3])
def test_cross_is_f_pure(p):
    flag, _ = is_f_pure(coordinate_cross(p))
    assert flag


# -- generator minimization and minimal primes ------------------------------------------


def test_minimal_ideal_generators_drop_redundancy():
    rs = flagship()
    gens = [
        rs.ring.parse("x"),
        rs.ring.parse("x + y"),
        rs.ring.parse("y"),
        rs.ring.parse("x*y"),
    ]
    minimal = minimal_ideal_generators(rs, gens)
    assert len(minimal) == 2
    assert rs.ideal_eq_in_r(minimal, gens)


def test_minimal_prime_count():
    assert minimal_prime_count(flagship()) == 3
    assert minimal_prime_count(coordinate_cross()) == 2
    assert minimal_prime_count(RingSpec(2, ["x", "y"], ["x^2 + x*y"])) is None


def test_generic_gorenstein_detection():
    flag, _ = monomial_generically_gorenstein(flagship())
    assert flag
    thick_line = RingSpec(2, ["x", "y", "z"], ["x^2", "x*y", "y^2"])
    flag, detail = monomial_generically_gorenstein(thick_line)
    assert not flag


# -- ideal isomorphism ----------------------------------------------------------------


def test_principal_multiple_is_isomorphic():
    rs = flagship()
    ell = rs.ring.parse("x + y + z")
    gens = [rs.ring.parse("x"), rs.ring.parse("y"), rs.ring.parse("z")]
    moved = [rs.nf(ell * g) for g in gens]
    out = ideals_isomorphic(rs, gens, moved)
    assert out.verdict == "true"
    h, f = out.multiplier
    lhs = [rs.nf(h * g) for g in gens]
    rhs = [rs.nf(f * g) for g in moved]
    assert rs.ideal_eq_in_r(lhs, rhs)


def test_equal_ideals_are_isomorphic():
    rs = coordinate_cross()
    gens = [rs.ring.parse("x + y")]
    out = ideals_isomorphic(rs, gens, gens)
    assert out.verdict == "true"


def test_isomorphism_is_symmetric():
    rs = flagship()
    omega = canonical_ideal(rs).generators
    target = [rs.ring.parse("y - x"), rs.ring.parse("z - x")]
    assert ideals_isomorphic(rs, list(omega), target).verdict == "true"
    assert ideals_isomorphic(rs, target, list(omega)).verdict == "true"


def test_canonical_ideal_is_not_principal_for_flagship():
    rs = flagship()
    omega = canonical_ideal(rs).generators
    out = ideals_isomorphic(rs, list(omega), [rs.ring.parse("x + y + z")])
    assert out.verdict == "false"


def test_hilbert_series_mismatch_refutes_quickly():
    rs = coordinate_cross()
    out = ideals_isomorphic(
        rs, [rs.ring.parse("x + y")], [rs.ring.parse("x^2 + y^2")]
    )
    # (x+y) and (x^2+y^2) = (x+y)^2 are both principal on a nonzerodivisor,
    # hence abstractly isomorphic; the shift records the initial-degree gap
    assert out.verdict == "true"
    assert out.shift == -1


# -- canonical ideals -------------------------------------------------------------------


@pytest.mark.parametrize("p", [2, 3])
def test_canonical_ideal_of_cross_is_principal(p):
    rs = coordinate_cross(p)
    out = canonical_ideal(rs)
    assert out.status == "found"
    assert len(out.generators) == 1
    assert rs.is_nzd(out.generators[0])


def test_canonical_ideal_of_flagship():
    rs = flagship()
    out = canonical_ideal(rs)
    assert out.status == "found"
    assert len(out.generators) == 2
    assert {g.degree() for g in out.generators} == {1}


def test_canonical_ideal_requires_cohen_macaulay():
    with pytest.raises(NotCohenMacaulayError):
        canonical_ideal(RingSpec(2, ["x", "y"], ["x^2", "x*y"]))


def test_canonical_ideal_requires_dimension_one():
    with pytest.raises(UnsupportedDimensionError):
        canonical_ideal(RingSpec(2, ["x"], ["x^2"]))
    with pytest.raises(UnsupportedDimensionError):
        canonical_ideal(RingSpec(2, ["x", "y"], []))


def test_canonical_ideal_absent_for_fat_generic_point():
    rs = RingSpec(2, ["x", "y", "z"], ["x^2", "x*y", "y^2"])
    assert ring_depth(rs) == 1
    out = canonical_ideal(rs)
    assert out.status == "absent"


def test_canonical_ideal_is_seed_independent_up_to_isomorphism():
    rs = flagship(3)
    a = canonical_ideal(rs, seed=0)
    b = canonical_ideal(rs, seed=11)
    assert a.status == b.status == "found"
    out = ideals_isomorphic(rs, list(a.generators), list(b.generators))
    assert out.verdict == "true"


# -- classification reports ----------------------------------------------------------------


def test_classify_fat_point():
    report = classify_ring(RingSpec(2, ["x", "y"], ["x^2", "x*y", "y^2"]))
    assert report.dimension == 0
    assert report.gorenstein is False
    assert report.weakly_fpi == "false"
    assert report.fpi_method == "artinian_E"
    assert report_is_decisive(report)


def test_classify_dual_numbers():
    report = classify_ring(RingSpec(2, ["x"], ["x^2"]))
    assert report.gorenstein is True
    assert report.weakly_fpi == "true"
    assert report.f_pure is False


def test_classify_cross():
    report = classify_ring(coordinate_cross())
    assert report.dimension == 1
    assert report.cohen_macaulay is True
    assert report.gorenstein is True
    assert report.f_pure is True
    assert report.weakly_fpi == "true"
    assert report.fpi_method == "canonical_ideal"
    assert report.minimal_prime_count == 2


def test_classify_flagship_full_report():
    report = classify_ring(flagship())
    assert report.dimension == 1
    assert report.depth == 1
    assert report.cohen_macaulay is True
    assert report.gorenstein is False
    assert report.f_pure is True
    assert report.weakly_fpi == "true"
    assert report.minimal_prime_count == 3
    names = {c["name"] for c in report.cross_checks}
    assert "gorenstein_implies_fpi" in names
    assert all(
        c["status"] in {"confirmed", "not_applicable", "skipped", "unresolved"}
        for c in report.cross_checks
    )


def test_classify_depth_zero_curve():
    report = classify_ring(RingSpec(2, ["x", "y"], ["x^2", "x*y"]))
    assert report.dimension == 1
    assert report.depth == 0
    assert report.cohen_macaulay is False
    assert report.weakly_fpi == "false"


def test_classify_rejects_high_dimension():
    with pytest.raises(UnsupportedDimensionError):
        classify_ring(RingSpec(2, ["x", "y", "z"], ["x*y"]))


def test_classify_fpure_check_works_in_any_dimension():
    rs = RingSpec(2, ["x", "y", "z"], ["x*y"])
    report = classify_ring(rs, check="fpure")
    assert report.f_pure is True
    assert report_is_decisive(report, check="fpure")
    cusp = RingSpec(3, ["x", "y"], ["y^2 - x^3"], require_homogeneous=False)
    report = classify_ring(cusp, check="fpure")
    assert report.f_pure is False


def test_classify_gorenstein_check_stops_early():
    report = classify_ring(coordinate_cross(), check="gorenstein")
    assert report.gorenstein is True
    assert report.weakly_fpi is None
    assert report_is_decisive(report, check="gorenstein")


def test_report_dict_shape():
    report = classify_ring(flagship())
    data = report.to_dict()
    keys = list(data)
    assert keys[0] == "schema" and data["schema"] == 1
    for expected in (
        "label",
        "p",
        "variables",
        "ideal",
        "dimension",
        "depth",
        "cohen_macaulay",
        "gorenstein",
        "f_pure",
        "weakly_fpi",
        "cross_checks",
    ):
        assert expected in keys


def test_thick_line_classifies_false():
    report = classify_ring(RingSpec(2, ["x", "y", "z"], ["x^2", "x*y", "y^2"]))
    assert report.cohen_macaulay is True
    assert report.weakly_fpi == "false"
    assert report.canonical["status"] == "absent"


# -- reduction to the Artinian test -----------------------------------------------------


@pytest.mark.parametrize(
    "p,names,gens",
    [
        (2, ["x", "y"], ["x*y"]),
        (3, ["x", "y"], ["x*y"]),
        (2, ["x", "y", "z"], ["x*y", "x*z", "y*z"]),
        (3, ["x", "y"], ["y^2 - x^2"]),
    ],
)
def test_gorenstein_matches_hull_test_after_cutting(p, names, gens):
    # for a 1-dimensional CM ring, Gorenstein-ness is equivalent to the
    # depth-zero Frobenius hull comparison succeeding on R/(ell), because
    # both reduce to a one-dimensional socle of the Artinian reduction
    rs = RingSpec(p, names, gens)
    flag, _ = is_gorenstein(rs)
    ell = find_nzds(rs, count=1)[0]
    rq = rs.quotient_by([ell])
    rep = frobenius_fixes_injective_hull(rq)
    assert (rep.iso.verdict == "isomorphic") == flag
