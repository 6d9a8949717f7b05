"""JSON codec round trips and schema rejection."""

import pytest

from cubica.algebra import Polynomial, PrimeField, QQ, RationalFunction
from cubica.function_field import Place
from cubica.jsonio import (SchemaError, decode_cubic_model, decode_place,
                           decode_poly, decode_quadratic_model,
                           decode_ratfunc, encode_cubic_model, encode_place,
                           encode_poly, encode_quadratic_model,
                           encode_ratfunc, field_from_spec)
from cubica.models import CubicModel
from cubica.quadratic import QuadraticModel

F5 = PrimeField(5)


def test_field_specs():
    assert field_from_spec("5").p == 5
    assert field_from_spec("q") is QQ or field_from_spec("q") == QQ
    assert field_from_spec("2^2").order == 4
    with pytest.raises(SchemaError):
        field_from_spec("4")
    with pytest.raises(SchemaError):
        field_from_spec("3")


def test_poly_round_trip():
    x = Polynomial.x(F5)
    p = 2 * x ** 3 + x + 4
    assert decode_poly(F5, encode_poly(p)) == p
    xq = Polynomial.x(QQ)
    q = xq ** 2 - QQ(1) / 2 * xq
    assert decode_poly(QQ, encode_poly(q)) == q


def test_ratfunc_round_trip():
    x = Polynomial.x(F5)
    f = RationalFunction(2 * x * x + 1, x * x + 2)
    assert decode_ratfunc(F5, encode_ratfunc(f)) == f


def test_place_round_trip_and_validation():
    x = Polynomial.x(F5)
    p = Place.finite(x ** 2 + 2)
    assert decode_place(F5, encode_place(p)) == p
    inf = Place.infinity(F5)
    assert decode_place(F5, encode_place(inf)) == inf
    with pytest.raises(SchemaError):
        decode_place(F5, {"poly": ["4", "0", "1"]})   # reducible
    with pytest.raises(SchemaError):
        decode_place(F5, {"nope": 1})


def test_model_round_trips():
    x = Polynomial.x(F5)
    pure = CubicModel.pure(RationalFunction(x * (x - 1)))
    assert decode_cubic_model(F5, encode_cubic_model(pure)).beta == pure.beta
    imp = CubicModel.impure(F5(2), RationalFunction(x - 2, x - 1))
    back = decode_cubic_model(F5, encode_cubic_model(imp))
    assert back.c == imp.c and back.alpha == imp.alpha
    qm = QuadraticModel.kummer(x * x - 2)
    assert decode_quadratic_model(F5, encode_quadratic_model(qm)).f == qm.f


def test_char2_model_codec():
    F2 = PrimeField(2)
    m = decode_quadratic_model(F2, {"artin_schreier": True})
    assert m.kind == "artin_schreier"
    back = decode_quadratic_model(F2, encode_quadratic_model(m))
    assert back.gamma == m.gamma
