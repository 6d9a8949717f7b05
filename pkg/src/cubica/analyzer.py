"""Read total/partial ramification, genus, closure and resolvent off a cubic
model.

Pure y^3 = beta: triple ramification exactly where gcd(v_p(beta), 3) = 1
(infinity included via the degree), no double points.  Impure
y^3 = 3c y + alpha: triple ramification at poles of alpha of order not
divisible by 3; double ramification at odd-multiplicity zeros of
alpha^2 - 4c^3 (characteristic != 2) or at the branch locus of the
Artin-Schreier closure class c^3/alpha^2 (characteristic 2).
"""

from __future__ import annotations

from .algebra import FieldError, Polynomial, RationalFunction, poly_factor
from .function_field import Place, genus_of_cubic, valuation
from .models import CubicModel, RamificationReport, sorted_places
from .quadratic import ASClass


def _place_factorization(poly: Polynomial, seed=0, hints=None):
    """[(Place, mult)] for a polynomial; over Q the caller-provided hints
    (monic irreducible polynomials) must cover every factor."""
    if poly.is_constant():
        return []
    if poly.field.order is not None:
        return [(Place.finite(p, check=False), m) for p, m in poly_factor(poly, seed=seed)]
    if hints is None:
        raise FieldError("factorization over Q needs caller-supplied place hints")
    rem = poly.monic()
    out = []
    for h in hints:
        m = 0
        while True:
            q, r = divmod(rem, h)
            if not r.is_zero():
                break
            rem = q
            m += 1
        if m:
            out.append((Place.finite(h, check=False), m))
    if rem.degree > 0:
        raise FieldError("place hints do not cover all factors")
    return out


def analyze(model: CubicModel, seed: int = 0, hints=None) -> RamificationReport:
    """Full ramification report of a cubic model; raises on degenerate input."""
    field = model.base
    char = field.char
    meta = {}
    if model.kind == "pure":
        beta = model.beta
        total = []
        for place, m in _place_factorization(beta.num, seed, hints):
            if m % 3 != 0:
                total.append(place)
        for place, m in _place_factorization(beta.den, seed, hints):
            if m % 3 != 0 and place not in total:
                total.append(place)
        if beta.degree_at_infinity() % 3 != 0:
            total.append(Place.infinity(field))
        if not total:
            raise FieldError("degenerate pure model: beta is a cube times a constant")
        partial = []
    else:
        alpha, c = model.alpha, model.c
        c3 = c ** 3
        total = []
        for place, m in _place_factorization(alpha.den, seed, hints):
            if m % 3 != 0:
                total.append(place)
        v_inf = alpha.degree_at_infinity()
        if v_inf < 0 and (-v_inf) % 3 != 0:
            total.append(Place.infinity(field))
        if char == 2:
            if alpha.is_zero():
                raise FieldError("degenerate model: alpha = 0")
            closure = ASClass.of(RationalFunction.from_const(field, c3) / (alpha * alpha),
                                 seed=seed)
            partial = closure.ramified_places()
            meta["wild_different_exponent"] = 2
        else:
            disc = alpha * alpha - field(4) * c3
            if disc.is_zero():
                raise FieldError("degenerate model: alpha^2 = 4c^3")
            partial = []
            for place, m in _place_factorization(disc.num, seed, hints):
                if m % 2 == 1:
                    partial.append(place)
            if disc.degree_at_infinity() % 2 == 1 and disc.degree_at_infinity() > 0:
                partial.append(Place.infinity(field))
    total = sorted_places(total)
    partial = sorted_places(partial)
    genus = genus_of_cubic(total, partial, char)
    return RamificationReport(total=total, partial=partial, genus=genus, metadata=meta)


def verify_against(model: CubicModel, expected_total, expected_partial,
                   seed: int = 0, hints=None):
    """(ok, diff): set comparison of the computed ramification against the
    expected one, with a structured diff on mismatch."""
    report = analyze(model, seed=seed, hints=hints)
    got_t, got_s = report.total_set(), report.partial_set()
    want_t, want_s = set(expected_total), set(expected_partial)
    diff = {}
    if got_t != want_t:
        diff["total_missing"] = sorted_places(want_t - got_t)
        diff["total_extra"] = sorted_places(got_t - want_t)
    if got_s != want_s:
        diff["partial_missing"] = sorted_places(want_s - got_s)
        diff["partial_extra"] = sorted_places(got_s - want_s)
    return (not diff), diff


def pole_orders_of_alpha(model: CubicModel, seed: int = 0, hints=None):
    """{place: -v_p(alpha)} over the poles of alpha (impure models)."""
    if model.kind != "impure":
        raise FieldError("pole orders are reported for impure models")
    out = {}
    for place, m in _place_factorization(model.alpha.den, seed, hints):
        out[place] = m
    v_inf = model.alpha.degree_at_infinity()
    if v_inf < 0:
        out[Place.infinity(model.base)] = -v_inf
    return out


def valuation_of_alpha(model: CubicModel, place: Place) -> int:
    return valuation(model.alpha, place)
