import random

import pytest
from gmpy2 import mpq
from hypothesis import assume, given, settings, strategies as st

import inose.core as core
from inose.algebra import RatFunc, UniPoly, descend_to_s
from inose.catalog import two_isogeny
from inose.core import (SectionF1, TransformTables, assemble_section, build_cubic, build_model,
                        check_fit, compute_section, expected_half_degree, fit_curve,
                        fitting_family, inose_coefficients, intersection_with_zero, ninth_point,
                        origin, origin_bar, psi_transform, section_height, split_divisor)
from inose.elliptic import ECPoint, EllipticCurve, RationalMap, ec_add, verify_isogeny
from inose.errors import (DegenerateSection, DegreeMismatch, EmptyFamily, EqualJInvariant,
                          HeightMismatch, IsogenyInvalid, NonIntegralIntersection,
                          NotInSubfield, NotSquarefree, ResidualNotLinear, SingularInput,
                          TransformDenominatorVanishes)
from inose.plane import ProjPoint, TriPoly, evaluate

from helpers import collinear_triples, psi_points, random_fitted_curves, specialized_setting

u = UniPoly.gen("u")
s = UniPoly.gen("s")


# ---------------------------------------------------------------------------
# coefficients and models


def test_coefficients_degree_5(d5):
    data = inose_coefficients(d5.e1, d5.e2)
    assert data.A == 7936
    assert data.B / 64 == mpq(-6082432, 27)
    assert data.delta1 == -45056
    assert data.delta2 / 64 == -10307264


def test_coefficients_degree_6(d6):
    data = inose_coefficients(d6.e1, d6.e2)
    assert (data.A, data.delta1, data.delta2) == (436, 80, -4000000)
    assert data.B / 64 == mpq(-18997, 27)


def test_model_degree_5(d5):
    m = build_model(inose_coefficients(d5.e1, d5.e2), 6)
    assert m.alpha == mpq(-7936, 3)
    assert m.beta == RatFunc(u ** 12 * -704 + u ** 6 * mpq(-6082432, 27) - 10307264, u ** 6)


def test_model_in_s_and_other_n(d6):
    data = inose_coefficients(d6.e1, d6.e2)
    f1 = build_model(data, 1)
    assert f1.beta.var == "s"
    assert f1.beta == RatFunc(s * s * mpq(5, 4) + s * mpq(-18997, 27) - 62500, s)
    assert build_model(data, 2).beta.num.degree == 4
    with pytest.raises(ValueError):
        build_model(data, 0)


def test_singular_input_rejected():
    with pytest.raises(SingularInput):
        inose_coefficients(EllipticCurve(0, 0, 0), EllipticCurve(1, -1, 0))


def test_origin_bar_degree_5(d5):
    cubic = build_cubic(d5.e1, d5.e2)
    ob = origin_bar(cubic)
    assert ob == d5.origin_bar
    assert not evaluate(cubic, ob)


# ---------------------------------------------------------------------------
# splitting


def _proportional(a, b):
    ratio = RatFunc(a.lc) / RatFunc(b.lc)
    return ratio.is_constant() and all(RatFunc(x) == RatFunc(y) * ratio
                                       for x, y in zip(a.coeffs, b.coeffs))


def test_split_matches_tables(d5, d6):
    for ex in (d5, d6):
        pair = split_divisor(ex.e1, ex.e2, ex.phi)
        assert pair.r == expected_half_degree(ex.degree)
        assert _proportional(pair.p_plus, ex.p_plus)
        assert pair.p_minus == pair.p_plus.map_coeffs(lambda c: c.negate_var())


def test_expected_half_degree():
    assert [expected_half_degree(d) for d in (2, 3, 4, 5, 6, 7)] == [2, 3, 5, 6, 8, 9]


def test_equal_j_rejected():
    e1, e2, phi = two_isogeny(0, 1)
    with pytest.raises(EqualJInvariant):
        split_divisor(e1, e2, phi)


def test_identity_map_rejected(d5):
    ident = RationalMap.from_coefficients([0, 1], [1], [1], [1], 1)
    with pytest.raises(IsogenyInvalid):
        compute_section(d5.e1, d5.e2, ident)


def _skip_isogeny_check(monkeypatch):
    monkeypatch.setattr(core, "verify_isogeny", lambda *a: type("R", (), {"passed": True})())


def test_degree_mismatch_on_synthetic_map(monkeypatch, iso2):
    _skip_isogeny_check(monkeypatch)
    e1, e2, _ = iso2
    bogus = RationalMap.from_coefficients([1, 0, 1], [0, 1], [1, 2, 3, 4], [1], 2)
    with pytest.raises(DegreeMismatch):
        split_divisor(e1, e2, bogus)


def test_not_squarefree_on_synthetic_map(monkeypatch, iso2):
    _skip_isogeny_check(monkeypatch)
    e1, e2, _ = iso2
    # y_num - u^3 y_den = (x + 1)^2 (1 - u^3) has a double root
    bogus = RationalMap.from_coefficients([1, 0, 1], [0, 1], [1, 2, 1], [1, 2, 1], 2)
    with pytest.raises(NotSquarefree):
        split_divisor(e1, e2, bogus)


# ---------------------------------------------------------------------------
# fitting and the ninth point


def test_fitted_family_is_a_pencil_containing_the_cubic(run5, run6):
    for run in (run5, run6):
        family = fitting_family(run.cubic, run.pair, 1, run.origin_bar, run.phi.degree)
        assert len(family) == 2
        for q in family:
            assert check_fit(q, run.cubic, run.pair, 1, run.origin_bar, run.phi.degree) or \
                core.is_multiple_of_cubic(q, run.cubic)


def test_tabulated_curves_fit(d5, d6, run5, run6):
    for ex, run in ((d5, run5), (d6, run6)):
        assert check_fit(ex.curve_plus, run.cubic, run.pair, 1, run.origin_bar, ex.degree)
        assert ninth_point(run.cubic, ex.curve_plus, run.pair, 1, run.origin_bar,
                           ex.degree) == ex.ninth_plus


def test_cubic_itself_is_not_a_fit(run6):
    assert not check_fit(run6.cubic, run6.cubic, run6.pair, 1, None, 6)


def test_empty_family(monkeypatch, run6):
    monkeypatch.setattr(core, "fitting_family", lambda cubic, *a: [cubic])
    with pytest.raises(EmptyFamily):
        fit_curve(run6.cubic, run6.pair, 1, run6.origin_bar, 6)


def test_unrelated_curve_gives_no_ninth_point(run6):
    line_pair = TriPoly(3, {(3, 0, 0): 1, (0, 3, 0): 2, (0, 0, 3): 5, (1, 1, 1): 1})
    with pytest.raises(ResidualNotLinear):
        ninth_point(run6.cubic, line_pair, run6.pair, 1, run6.origin_bar, 6)


def test_ninth_point_in_swapped_chart(run5, run6):
    for run in (run5, run6):
        d = run.phi.degree
        for sign in (1, -1):
            swapped = core._residual(run.cubic, run.fitted[sign], run.pair.for_sign(sign),
                                     run.origin_bar if d % 2 else None, bool(d % 2), True)
            assert swapped == run.ninth[sign]


@pytest.mark.parametrize("name", ["run5", "run6"])
def test_cayley_bacharach_independence(name, request):
    run = request.getfixturevalue(name)
    rng = random.Random(2024)
    for sign in (1, -1):
        for q in random_fitted_curves(run, sign, 3, rng):
            assert ninth_point(run.cubic, q, run.pair, sign, run.origin_bar,
                               run.phi.degree) == run.ninth[sign]


# ---------------------------------------------------------------------------
# the transform


def test_transform_lands_on_f6(run5, run6):
    for run in (run5, run6):
        f6 = build_model(run.data, 6)
        for sign in (1, -1):
            assert f6.contains(run.lifted[sign])


def test_transform_of_origin(d5):
    assert psi_transform(d5.e1, d5.e2, origin()).is_infinity


def test_transform_denominator_is_tangent_at_origin(d5, d6):
    for ex in (d5, d6):
        ob = origin_bar(build_cubic(ex.e1, ex.e2))
        with pytest.raises(TransformDenominatorVanishes):
            psi_transform(ex.e1, ex.e2, ob)
        image = psi_transform(ex.e1, ex.e2, ob, extend=True)
        assert build_model(inose_coefficients(ex.e1, ex.e2), 6).contains(image)


def test_transform_off_curve_denominator(d5):
    with pytest.raises(TransformDenominatorVanishes):
        psi_transform(d5.e1, d5.e2, ProjPoint(0, 4 - 4 * u ** 2, 3))


@pytest.mark.parametrize("name", ["d5", "d6"])
@pytest.mark.parametrize("u0", [2, mpq(-1, 2), 3])
def test_transform_is_a_homomorphism(name, u0, request):
    ex = request.getfixturevalue(name)
    run = request.getfixturevalue("run" + name[1])
    cubic, model, seeds = specialized_setting(ex, run, u0)
    target = psi_transform(ex.e1, ex.e2, seeds[1], u=u0, extend=True)
    for triple in collinear_triples(cubic, seeds, 4, random.Random(hash((name, u0)))):
        p, q, r = psi_points(ex, triple, u0)
        assert model.contains(p) and model.contains(q) and model.contains(r)
        assert ec_add(model, ec_add(model, p, q), r) == target


def test_transform_tables_sign_convention(d5):
    # the u^4 term of the Y numerator uses the d4 form
    t = TransformTables.from_curves(d5.e1, d5.e2)
    assert t.d4.coefficient(2, 0, 0) != 0 and t.d4.coefficient(0, 2, 0) == 0


# ---------------------------------------------------------------------------
# sections and heights


def test_sections_match_tables(d5, d6, run5, run6):
    for ex, run in ((d5, run5), (d6, run6)):
        assert run.section.X == ex.section_x
        assert run.section.Y == ex.section_y
        assert run.section.height == 2 * ex.degree
        assert run.section.intersection == ex.degree - 2


def test_sigma_symmetry(run5, run6):
    for run in (run5, run6):
        assert run.ninth[-1] == run.ninth[1].negate_var()
        plus, minus = run.lifted[1], run.lifted[-1]
        assert minus.x == plus.x.negate_var()
        assert minus.y == -plus.y.negate_var()


def test_degenerate_section(run6):
    p = run6.lifted[1]
    with pytest.raises(DegenerateSection):
        assemble_section(p, p, run6.data)


def _section(num, den):
    return ECPoint(RatFunc(UniPoly(num, "s"), UniPoly(den, "s")), RatFunc.const(0, "s"))


def test_height_local_contributions():
    assert intersection_with_zero(RatFunc(UniPoly([1], "s"), s ** 2)) == 0
    assert intersection_with_zero(RatFunc(UniPoly([1], "s"), s ** 4)) == 1
    assert intersection_with_zero(RatFunc(s ** 4, UniPoly([1], "s"))) == 1
    assert intersection_with_zero(RatFunc(UniPoly([1], "s"), (s - 1) ** 2 * (s + 3) ** 2)) == 2
    assert section_height(ECPoint.infinity()) == 0


@pytest.mark.parametrize("x", [
    RatFunc(UniPoly([1], "s"), s - 1),
    RatFunc(UniPoly([1], "s"), s ** 3),
    RatFunc(s ** 3, UniPoly([1], "s")),
])
def test_non_integral_intersection(x):
    with pytest.raises(NonIntegralIntersection):
        intersection_with_zero(x)


def test_section_height_checks_the_curve(run6):
    sec = run6.section
    assert section_height(sec, run6.data) == 12
    from inose.errors import PointNotOnCurve
    with pytest.raises(PointNotOnCurve):
        section_height(ECPoint(sec.X + 1, sec.Y), run6.data)


def test_not_in_subfield():
    with pytest.raises(NotInSubfield):
        descend_to_s(RatFunc(u ** 3 + 1, u))


def test_height_mismatch(monkeypatch, iso2):
    real = core.run_pipeline

    def fake(*args):
        run = real(*args)
        sec = run.section
        run.section = SectionF1(sec.X, sec.Y, mpq(6), 1, sec.degree)
        return run

    monkeypatch.setattr(core, "run_pipeline", fake)
    with pytest.raises(HeightMismatch):
        compute_section(*iso2)


def test_two_isogeny_section(iso2):
    section = compute_section(*iso2)
    assert section.height == 4 and section.intersection == 0


@settings(max_examples=15)
@given(st.integers(-8, 8), st.integers(-8, 8))
def test_random_two_isogenies_have_height_four(a, b):
    assume(b != 0 and a * a != 4 * b)
    e1, e2, phi = two_isogeny(a, b)
    assume(e1.j_invariant != e2.j_invariant)
    assert compute_section(e1, e2, phi).height == 4


# ---------------------------------------------------------------------------
# other degrees


@pytest.mark.parametrize("a2,a4", [(1, 2), (2, 4), (-1, 2), (3, 6)])
def test_degree_three_sections(a2, a4):
    from helpers import three_isogeny
    e1, e2, phi = three_isogeny(a2, a4)
    assert verify_isogeny(e1, e2, phi).passed
    section = compute_section(e1, e2, phi)
    assert section.height == 6 and section.intersection == 1


@pytest.mark.parametrize("a,c", [(1, 2), (3, 1), (-1, 3)])
def test_degree_four_sections(a, c):
    from helpers import cyclic_two_power
    e1, e2, phi = cyclic_two_power(a, c, 2)
    assert verify_isogeny(e1, e2, phi).passed and phi.degree == 4
    assert compute_section(e1, e2, phi).height == 8


def test_degree_eight_section():
    from helpers import cyclic_two_power
    e1, e2, phi = cyclic_two_power(7, 1, 3)
    assert verify_isogeny(e1, e2, phi).passed and phi.degree == 8
    assert compute_section(e1, e2, phi).height == 16

