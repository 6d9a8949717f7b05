"""Descent from the quadratic closure: frozen examples (verified by hand
against the explicit formulas), round trips through the analyzer, counts,
twists and the character-sum cross count."""

import random
from fractions import Fraction

import pytest

from cubica.algebra import (Polynomial, PrimeField, QuadraticField,
                            RationalFunction, is_irreducible)
from cubica.analyzer import analyze, pole_orders_of_alpha
from cubica.descent import (construct, enumerate_descents, exists_descent,
                            make_problem, norm_one_cube_reps, serre_count,
                            twists_descent)
from cubica.function_field import Place
from cubica.models import CubicModel
from cubica.pure_cubic import count_pure
from cubica.quadratic import QuadraticModel, SquareClass, purely_cubic_closure

F5 = PrimeField(5)
F7 = PrimeField(7)


def x_of(field):
    return Polynomial.x(field)


def rf(num, den=None):
    return RationalFunction(num, den)


def same_up_to_flip(a1, a2):
    return a1 == a2 or a1 == -a2


# -- existence ----------------------------------------------------------------


def test_exists_descent():
    x = x_of(F5)
    K2 = QuadraticModel.constant(F5, F5(2))
    assert not exists_descent(K2, [Place.finite(x)])
    assert exists_descent(K2, [Place.finite(x ** 2 + 2)])
    Kx = QuadraticModel.kummer(x)
    assert exists_descent(Kx, [Place.finite(x - 1)])
    assert not exists_descent(Kx, [])


# -- frozen constructions --------------------------------------------------------


def test_constant_closure_bitwist_crosscheck():
    """K(sqrt 2)/F5, T = {(x^2+2)}: alpha must match the explicit bi-twist
    formula (2x^2 + 2ax + (a^2-2b))/(x^2 + ax + b) at x^2+ax+b = x^2+2."""
    x = x_of(F5)
    K2 = QuadraticModel.constant(F5, F5(2))
    res = construct(make_problem(K2, [Place.finite(x ** 2 + 2)]))
    expected = rf(2 * x ** 2 + 1, x ** 2 + 2)
    assert res.c.is_one()
    assert same_up_to_flip(res.model.alpha, expected)
    # both sign choices give the same alpha here (t = 1, f <-> 1/f)
    res2 = construct(make_problem(K2, [Place.finite(x ** 2 + 2)], signs=[-1]))
    assert same_up_to_flip(res2.model.alpha, expected)


def test_nonconstant_closure_y2_eq_x():
    """K': y^2 = x over F5, T = {(x-1)}: alpha = +-(2x+2)/(x-1), c = 1;
    analyzer sees total {x-1}, partial {x, inf}."""
    x = x_of(F5)
    Kx = QuadraticModel.kummer(x)
    p = Place.finite(x - 1)
    res = construct(make_problem(Kx, [p]))
    assert res.case == "odd_stable_point"
    assert res.c.is_one()
    assert same_up_to_flip(res.model.alpha, rf(2 * x + 2, x - 1))
    rep = analyze(res.model)
    assert rep.total_set() == {p}
    assert rep.partial_set() == {Place.finite(x), Place.infinity(F5)}
    assert rep.genus == 0


def test_case_2b_frozen():
    """K': y^2 = x^2 - 2 over F5 (branch locus one degree-2 place),
    T = {(x-1)}: c = 2 = l*sigma(l) and all poles simple; the c = 1 companion
    has the single pole of order 2."""
    x = x_of(F5)
    M = QuadraticModel.kummer(x ** 2 - 2)
    p = Place.finite(x - 1)
    res = construct(make_problem(M, [p]))
    assert res.case == "case_2b"
    assert res.c == F5(2)
    assert same_up_to_flip(res.model.alpha, rf(x - 2, x - 1))
    orders = pole_orders_of_alpha(res.model)
    assert orders == {p: 1}
    rep = analyze(res.model)
    assert rep.total_set() == {p}
    assert rep.partial_set() == {Place.finite(x ** 2 - 2)}
    # companion with c = 1: one pole of order exactly 2, same ramification
    assert res.unit_form is not None and res.unit_form.c.is_one()
    orders1 = pole_orders_of_alpha(res.unit_form)
    assert orders1 == {p: 2}
    rep1 = analyze(res.unit_form)
    assert rep1.total_set() == {p}
    assert rep1.partial_set() == {Place.finite(x ** 2 - 2)}


def test_theta_and_f_data_consistency():
    """alpha = c(f + sigma f) and f sigma(f) = c hold for the reported data."""
    x = x_of(F5)
    Kx = QuadraticModel.kummer(x)
    res = construct(make_problem(Kx, [Place.finite(x - 1)]))
    A, B = res.f_pair
    # f sigma(f) = A^2 - B^2 x = c
    norm = A * A - B * B * rf(x)
    assert norm.is_constant() and norm.constant_value() == res.c
    assert res.model.alpha == res.c * (A + A)


# -- random round trips --------------------------------------------------------------


def _random_split_places(model, field, rng, max_deg=2, count=3, allow_inf=True):
    from itertools import product as iproduct
    places = []
    if allow_inf and model.splitting_type(Place.infinity(field)).kind == "split":
        places.append(Place.infinity(field))
    polys = []
    for d in range(1, max_deg + 1):
        for low in iproduct(range(field.p), repeat=d):
            poly = Polynomial(field, [field(c) for c in low] + [field.one])
            if is_irreducible(poly):
                polys.append(poly)
    rng.shuffle(polys)
    for poly in polys:
        p = Place.finite(poly, check=False)
        if model.splitting_type(p).kind == "split":
            places.append(p)
        if len(places) >= count + 2:
            break
    rng.shuffle(places)
    return places[:count]


def _closure_menu(field):
    x = x_of(field)
    eps = None
    for e in field.elements():
        from cubica.algebra import is_square
        if not e.is_zero() and not is_square(e):
            eps = e
            break
    irr = None
    from itertools import product as iproduct
    for b in range(field.p):
        for a in range(field.p):
            cand = Polynomial(field, [field(b), field(a), field.one])
            if is_irreducible(cand):
                irr = cand
                break
        if irr is not None:
            break
    split_quad = x * (x - 1)
    return [
        QuadraticModel.constant(field, eps),
        QuadraticModel.kummer(x),
        QuadraticModel.kummer(eps * (x - 1)),
        QuadraticModel.kummer(split_quad),
        QuadraticModel.kummer(irr),
        QuadraticModel.kummer(eps * irr),
    ]


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_descent_round_trip_random(p):
    field = PrimeField(p)
    rng = random.Random(100 + p)
    trials = 0
    for model in _closure_menu(field):
        branch = set(model.branch_places())
        for _ in range(5):
            T = _random_split_places(model, field, rng,
                                     count=rng.randrange(1, 5))
            if not T or len(set(T)) != len(T):
                continue
            signs = [rng.choice((1, -1)) for _ in T]
            res = construct(make_problem(model, T, signs))
            trials += 1
            rep = analyze(res.model)
            assert rep.total_set() == set(T), (model, T)
            assert rep.partial_set() == branch, (model, T)
            # closure round trip
            assert purely_cubic_closure(res.model) == model.class_data()
            # pole bound: all simple for the minimal model
            orders = pole_orders_of_alpha(res.model)
            assert set(orders) == set(T)
            assert all(v == 1 for v in orders.values())
            if res.case == "case_2b":
                o1 = pole_orders_of_alpha(res.unit_form)
                assert sorted(o1.values()) in ([2], [1] * (len(T) - 1) + [2])
                assert sum(1 for v in o1.values() if v == 2) == 1
            # f sigma(f) is the constant c
            A, B = res.f_pair
            a_r, b_r = _generator_minpoly(model)
            norm = A * A + a_r * A * B - b_r * B * B
            assert norm.is_constant() and norm.constant_value() == res.c
    assert trials >= 20


def _generator_minpoly(model):
    field = model.field
    if model.is_constant_extension():
        return (RationalFunction.zero(field),
                RationalFunction.from_const(field, model.f.constant_coeff()))
    return RationalFunction.zero(field), RationalFunction(model.f)


def test_flipping_all_signs_gives_same_alpha():
    """Global negation is the y -> 1/y isomorphism: alpha is unchanged
    exactly, in every divisor case."""
    rng = random.Random(3)
    for field in (F5, F7):
        from cubica.acceptance import closure_menu, random_split_places
        for M in closure_menu(field):
            T = random_split_places(M, field, rng, rng.randrange(1, 4))
            if not T:
                continue
            res_plus = construct(make_problem(M, T, [1] * len(T)))
            res_minus = construct(make_problem(M, T, [-1] * len(T)))
            assert res_plus.model.alpha == res_minus.model.alpha, (M, T)


# -- counts --------------------------------------------------------------------------


def test_enumerate_descents_counts():
    x = x_of(F5)
    M = QuadraticModel.constant(F5, F5(2))
    one = enumerate_descents(M, [Place.finite(x ** 2 + 2)])
    assert len(one) == 1
    Kx = QuadraticModel.kummer(x)
    T3 = _random_split_places(Kx, F5, random.Random(11), count=3, allow_inf=False)
    assert len(T3) == 3
    res = enumerate_descents(Kx, T3)
    assert len(res) == 4
    alphas = [r.model.alpha for r in res]
    for i in range(len(alphas)):
        for j in range(i + 1, len(alphas)):
            assert not same_up_to_flip(alphas[i], alphas[j])
    # non-split T: zero results
    assert enumerate_descents(M, [Place.finite(x)]) == []


def test_enumerate_matches_serre():
    x = x_of(F5)
    Kx = QuadraticModel.kummer(x)
    pool = _random_split_places(Kx, F5, random.Random(17), count=3, allow_inf=False)
    for t in (1, 2, 3):
        T = pool[:t]
        assert len(enumerate_descents(Kx, T)) == serre_count(2, t)


def test_serre_count_values():
    assert serre_count(2, 1) == 1
    assert serre_count(3, 1) == 0
    assert serre_count(5, 4) == 0
    assert serre_count(4, 2) == Fraction(9 * 2)
    for t in range(1, 9):
        assert serre_count(0, t) == count_pure(0, t)
        assert serre_count(2, t) == 2 ** (t - 1)


# -- twists ---------------------------------------------------------------------------


def test_twists_constant_closure():
    x = x_of(F5)
    M = QuadraticModel.constant(F5, F5(2))
    res = construct(make_problem(M, [Place.finite(x ** 2 + 2)]))
    tw = twists_descent(res)
    assert len(tw) == 3   # |N_1| = 6, N_1/N_1^3 of order 3
    alphas = [t.alpha for t in tw]
    for i in range(3):
        for j in range(i + 1, 3):
            assert alphas[i] != alphas[j]
    for t in tw:
        rep = analyze(t)
        assert rep.total_set() == {Place.finite(x ** 2 + 2)}


def test_twists_trivial_cases():
    x7 = x_of(F7)
    M7 = QuadraticModel.constant(F7, F7(3))
    res7 = construct(make_problem(M7, [Place.finite(x7 ** 2 + 1)]))
    assert len(twists_descent(res7)) == 1   # gcd(3, 8) = 1
    x = x_of(F5)
    Kx = QuadraticModel.kummer(x)
    res = construct(make_problem(Kx, [Place.finite(x - 1)]))
    assert len(twists_descent(res)) == 1    # nonconstant closure


def test_norm_one_reps():
    F25 = QuadraticField(F5, 0, 2)
    reps = norm_one_cube_reps(F25)
    assert len(reps) == 3
    for u in reps:
        assert F25.norm(u).is_one()
    F49 = QuadraticField(F7, 0, 3)
    assert len(norm_one_cube_reps(F49)) == 1
