"""Groebner bases, normal forms, quotient invariants, socle, colon, trims."""

import random

import pytest

import helpers
from gtrim import (
    Ideal,
    Polynomial,
    QuotientRing,
    d_poly,
    ideal_equal,
    scale_by_maximal,
    trim,
    variables,
)
from gtrim.errors import NonHomogeneousError, NotNPrimaryError
from gtrim.linalg import span_rank
from gtrim.poly import mono_div, mono_divides, mono_key, mono_lcm, monomials_of_degree

F = helpers.field()
X, Y, Z = variables(F)
ONE = Polynomial.constant(F, 1)


def s_polynomial(f, g, order):
    """Independent S-polynomial construction for the Buchberger criterion."""
    lmf, lmg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = mono_lcm(lmf, lmg)
    a = Polynomial.monomial(f.field, mono_div(lcm, lmf), f.field.inv(f.leading_coeff(order)))
    b = Polynomial.monomial(g.field, mono_div(lcm, lmg), g.field.inv(g.leading_coeff(order)))
    return a * f - b * g


def assert_reduced_groebner(ideal):
    """Buchberger criterion plus the shape conditions of the reduced basis."""
    gb = ideal.groebner_basis()
    order = ideal.order
    for g in ideal.generators:
        assert ideal.normal_form(g).is_zero()
    for i in range(len(gb)):
        for j in range(i + 1, len(gb)):
            s = s_polynomial(gb[i], gb[j], order)
            assert ideal.normal_form(s).is_zero()
    lms = [g.leading_monomial(order) for g in gb]
    for i, g in enumerate(gb):
        assert g.leading_coeff(order) == ideal.field.one
        for j, lm in enumerate(lms):
            if i == j:
                continue
            assert not mono_divides(lm, lms[i])
            assert not any(mono_divides(lm, m) for m in g.terms)


# ---- Groebner bases and normal forms ----------------------------------------

def test_family_m2_groebner_frozen():
    I = helpers.family_ideal(2)
    assert [g.to_text() for g in I.groebner_basis()] == [
        "y*z", "x*z", "y^2", "x*y - z^2", "x^2", "z^3"]
    assert I.normal_form(X * Y).to_text() == "z^2"
    assert I.contains(X * Y - Z ** 2)
    assert not I.contains(Z ** 2)


def test_trim_m2_d_groebner_frozen():
    I = helpers.trim_ideal(2, "d")
    assert [g.to_text() for g in I.groebner_basis()] == [
        "y*z", "x*z", "y^2", "x^2", "z^3"]


def test_buchberger_criterion_on_suite_instances():
    assert_reduced_groebner(helpers.family_ideal(2))
    assert_reduced_groebner(helpers.family_ideal(3))
    assert_reduced_groebner(helpers.trim_ideal(2, "x1"))
    assert_reduced_groebner(helpers.trim_ideal(3, "d"))
    assert_reduced_groebner(Ideal(helpers.family_ideal(2).generators, order="lex"))


def test_normal_form_properties_random():
    rng = random.Random(helpers.SEED + 4)
    ideals = [helpers.family_ideal(2), helpers.family_ideal(3),
              helpers.trim_ideal(2, "x1")]
    for _ in range(150):
        I = ideals[rng.randrange(len(ideals))]
        f = helpers.random_poly(rng, F, max_degree=4)
        g = helpers.random_poly(rng, F, max_degree=4)
        nf = I.normal_form(f)
        assert I.normal_form(nf) == nf
        assert I.contains(f - nf)
        assert I.normal_form(f + g) == nf + I.normal_form(g)


def test_membership_on_random_combinations():
    rng = random.Random(helpers.SEED + 5)
    for _ in range(150):
        I = helpers.family_ideal(rng.choice([2, 3]))
        h = Polynomial.zero(F)
        for g in I.generators:
            h = h + helpers.random_poly(rng, F, max_degree=2) * g
        assert I.contains(h)
        ring = I.quotient_ring()
        level = ring.basis(1) or ring.basis(0)
        s = Polynomial.monomial(F, level[0])
        assert not I.contains(h + s)


def test_membership_agrees_across_orders():
    rng = random.Random(helpers.SEED + 6)
    gens = helpers.family_ideal(3).generators
    a = Ideal(gens, order="grevlex")
    b = Ideal(gens, order="lex")
    for _ in range(60):
        f = helpers.random_poly(rng, F, max_degree=4)
        assert a.contains(f) == b.contains(f)
    assert a.equals(b)
    assert a == b
    assert ideal_equal(a, b)


def test_ideal_sum_and_empty():
    empty = Ideal([], field=F)
    assert empty.groebner_basis() == ()
    assert not empty.is_n_primary()
    I = helpers.family_ideal(2)
    assert (empty + I).equals(I)
    assert Ideal([X]) + Ideal([Y]) == Ideal([X, Y])
    with pytest.raises(ValueError):
        Ideal([])  # empty generators need an explicit field


def test_construction_rejects_bad_input():
    with pytest.raises(NonHomogeneousError):
        Ideal([X + X * X])
    with pytest.raises(ValueError):
        Ideal([X], order="bogus")
    with pytest.raises(ValueError):
        Ideal([X, Polynomial.variable(helpers.field(0), "y")])
    zero_kept = Ideal([X, Polynomial.zero(F)])
    assert zero_kept.generators == (X,)


# ---- quotient ring structure --------------------------------------------------

def test_is_n_primary_cases():
    assert helpers.family_ideal(2).is_n_primary()
    assert Ideal([X, Y, Z]).is_n_primary()
    assert Ideal([X * X, Y * Y, Z * Z]).is_n_primary()
    assert Ideal([ONE]).is_n_primary()
    assert not Ideal([X, Y]).is_n_primary()
    assert not Ideal([X * Y, Z]).is_n_primary()
    with pytest.raises(NotNPrimaryError):
        QuotientRing(Ideal([X, Y]))


def test_hilbert_functions_frozen():
    assert helpers.family_ideal(2).hilbert_function().coefficients == (1, 3, 1)
    assert helpers.family_ideal(3).hilbert_function().coefficients == (1, 3, 6, 3, 1)
    assert Ideal([X, Y, Z]).hilbert_function().coefficients == (1,)
    assert Ideal([X * X, Y * Y, Z * Z]).hilbert_function().coefficients == (1, 3, 3, 1)
    for sel in ("x0", "x1", "d", "y1", "y0"):
        assert helpers.trim_ideal(2, sel).hilbert_function().coefficients == (1, 3, 2)
    h = helpers.family_ideal(3).hilbert_function()
    assert (h.total(), h[2], h[99]) == (14, 6, 0)


def test_quotient_ring_bases_and_coords():
    ring = helpers.family_ideal(2).quotient_ring()
    assert ring.top_degree == 2
    assert ring.dim() == 5
    assert ring.basis(1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert ring.basis(2) == ((0, 0, 2),)
    assert ring.basis(3) == ()
    nf = ring.normal_form(X * Y + Z ** 2)
    assert ring.coords(nf, 2) == [F.of(2)]
    assert ring.from_vector(2, [F.of(2)]) == 2 * Z ** 2
    with pytest.raises(ValueError):
        ring.coords(X * Y, 2)  # x*y is not a standard monomial here


def test_component_basis_matches_hilbert():
    I = helpers.family_ideal(2)
    h = I.hilbert_function()
    for d in range(5):
        rows = I.component_basis(d)
        total = len(monomials_of_degree(d))
        assert span_rank(rows, total, F) == total - h[d]


# ---- minimal generators ---------------------------------------------------------

def test_minimal_generators_of_family_keep_all():
    for m in (2, 3):
        I = helpers.family_ideal(m)
        kept, count = I.minimal_generators()
        assert count == 2 * m + 1
        assert kept == list(I.generators)


def test_minimal_generators_drop_redundant():
    kept, count = Ideal([X, X * X]).minimal_generators()
    assert (kept, count) == ([X], 1)
    kept, count = Ideal([X * X, X * X + Y * Y, Y * Y]).minimal_generators()
    assert kept == [X * X, X * X + Y * Y] and count == 2
    kept, count = helpers.trim_ideal(2, "x1").minimal_generators()
    assert count == 4
    kept, count = helpers.trim_ideal(2, "d").minimal_generators()
    assert count == 5
    with pytest.raises(ValueError):
        Ideal([ONE]).minimal_generators()


# ---- socle and colon -------------------------------------------------------------

def test_socle_frozen_cases():
    soc = helpers.family_ideal(2).socle_basis()
    assert soc.type_rank == 1
    assert [s.to_text() for s in soc.basis] == ["z^2"]
    soc = Ideal([X * X, Y * Y, Z * Z]).socle_basis()
    assert soc.type_rank == 1
    assert [s.to_text() for s in soc.basis] == ["x*y*z"]
    assert Ideal([X, Y, Z]).socle_basis().type_rank == 1
    assert helpers.trim_ideal(3, "d").socle_basis().type_rank == 2


def test_socle_members_annihilate_maximal_ideal():
    for m, sel in ((2, None), (3, "x1")):
        I = helpers.family_ideal(m) if sel is None else helpers.trim_ideal(m, sel)
        for s in I.socle_basis().basis:
            assert not I.contains(s)
            for v in (X, Y, Z):
                assert I.contains(v * s)


def test_colon_frozen_cases():
    g2 = helpers.family_ideal(2)
    assert g2.colon_by_maximal().equals(g2 + Ideal([X * Y]))
    n = Ideal([X, Y, Z])
    assert n.colon_by_maximal().equals(Ideal([ONE]))
    ci = Ideal([X * X, Y * Y, Z * Z])
    assert ci.colon_by_maximal().equals(ci + Ideal([X * Y * Z]))


def test_colon_matches_bruteforce_oracle_spot():
    for label, I in helpers.small_instances()[:10]:
        assert helpers.colon_oracle(I).equals(I.colon_by_maximal()), label


# ---- trimming ---------------------------------------------------------------------

def test_scale_by_maximal_frozen():
    d2 = d_poly(2, F)
    J = scale_by_maximal(d2)
    assert [g.to_text() for g in J.generators] == [
        "x^2*y - x*z^2", "x*y^2 - y*z^2", "x*y*z - z^3"]
    assert all(J.contains(v * d2) for v in (X, Y, Z))
    assert not J.contains(d2)


def test_trim_replaces_one_generator():
    gens = list(helpers.family_ideal(2).generators)
    T = trim(gens, 0)
    assert T.equals(helpers.trim_ideal(2, "x0"))
    assert T.equals(Ideal([X ** 3, X * Z, X * Y - Z * Z, Y * Z, Y * Y]))
    assert not T.contains(X * X)
    assert all(T.contains(v * X * X) for v in (X, Y, Z))


def test_trim_validation():
    with pytest.raises(ValueError):
        trim([X, Y], 5)
    with pytest.raises(ValueError):
        trim([X, Polynomial.zero(F)], 1)


def test_trimmed_ideal_is_strictly_smaller():
    for m, sel in ((2, "x0"), (2, "d"), (3, "x1")):
        I = helpers.family_ideal(m)
        T = helpers.trim_ideal(m, sel)
        assert all(I.contains(g) for g in T.generators)
        assert not T.equals(I)
        assert T.quotient_ring().dim() == I.quotient_ring().dim() + 1


# ---- serialization ------------------------------------------------------------------

def test_json_round_trip():
    I = helpers.family_ideal(2)
    data = I.to_json_dict()
    assert data["field"] == {"char": 32003}
    assert data["order"] == "grevlex"
    assert data["generators"][0] == "x^2"
    assert Ideal.from_json_dict(data).equals(I)
    over_q = {"field": {"char": 0}, "generators": ["1/2*x^2 - y^2", "z^2"]}
    J = Ideal.from_json_dict(over_q)
    assert J.field.char == 0
    assert J.contains(Polynomial.variable(J.field, "x") ** 2
                      - 2 * Polynomial.variable(J.field, "y") ** 2)
