"""Scalar domains: axioms, canonical encoding, strict parsing."""

import json
from fractions import Fraction
from random import Random

import pytest

from drazinkit import (
    DivisionByZero,
    FieldMismatch,
    FieldScalar,
    ParseError,
    PrimeField,
    QQ,
    is_prime,
)
from drazinkit.fields import field_from_json_obj


def _sieve(limit: int):
    flags = [True] * limit
    flags[0] = flags[1] = False
    for i in range(2, limit):
        if flags[i]:
            for j in range(i * i, limit, i):
                flags[j] = False
    return [i for i, f in enumerate(flags) if f]


def test_is_prime_matches_sieve():
    primes = set(_sieve(2000))
    for n in range(2000):
        assert is_prime(n) == (n in primes), n


def test_is_prime_large_values():
    assert is_prime(2**61 - 1)  # Mersenne prime
    assert not is_prime(2**61 + 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7


def test_prime_field_constructor_validation():
    PrimeField(2)
    PrimeField(5)
    PrimeField(2**61 - 1)
    with pytest.raises(ParseError):
        PrimeField(1)
    with pytest.raises(ParseError):
        PrimeField(4)
    with pytest.raises(ParseError):
        PrimeField(2**64 + 13)
    with pytest.raises(ParseError):
        PrimeField("5")  # type: ignore[arg-type]


def _sample(field, rng: Random) -> FieldScalar:
    if field.characteristic == 0:
        return field.scalar(rng.randint(-50, 50), rng.randint(1, 20))
    return field.scalar(rng.randrange(field.characteristic))


@pytest.mark.parametrize("field", [QQ, PrimeField(5), PrimeField(97)])
def test_field_axioms(field):
    # 1000 random triples per field: ring axioms plus multiplicative inverse.
    rng = Random(12345)
    zero, one = field.zero_scalar(), field.one_scalar()
    for _ in range(1000):
        x, y, z = (_sample(field, rng) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert x + y == y + x
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + zero == x
        assert x * one == x
        assert x + (-x) == zero
        if x != zero:
            assert x * x.inverse() == one
            assert x / x == one


@pytest.mark.parametrize("field", [QQ, PrimeField(7)])
def test_encode_parse_round_trip(field):
    rng = Random(777)
    for _ in range(500):
        x = _sample(field, rng)
        assert field.parse(str(x)) == x


def test_rational_canonical_form():
    assert str(QQ.scalar(2, 4)) == "1/2"
    assert str(QQ.scalar(-2, 4)) == "-1/2"
    assert str(QQ.scalar(3, -6)) == "-1/2"  # denominator sign normalized
    assert str(QQ.scalar(4, 2)) == "2"
    assert str(QQ.scalar(0, 9)) == "0"
    assert QQ.scalar(Fraction(6, 4)) == QQ.scalar(3, 2)


@pytest.mark.parametrize(
    "text",
    ["", " 2", "2 ", "+3", "1/0", "01", "1/-2", "2/01", "a", "1.5", "--2", "1/2/3"],
)
def test_rational_parse_rejects(text):
    with pytest.raises(ParseError):
        QQ.parse(text)


@pytest.mark.parametrize("text", ["", "-1", "5", "7", "05", " 1", "1.0"])
def test_residue_parse_rejects(text):
    with pytest.raises(ParseError):
        PrimeField(5).parse(text)


def test_residue_parse_accepts_range():
    f = PrimeField(5)
    for v in range(5):
        assert f.parse(str(v)).value == v


def test_int_coercion_wraps_mod_p():
    f = PrimeField(5)
    assert f.scalar(-1) == f.scalar(4)
    assert f.scalar(12) == f.scalar(2)
    assert str(f.scalar(-1)) == "4"


def test_scalar_ops_with_ints():
    x = QQ.scalar(1, 2)
    assert x + 1 == QQ.scalar(3, 2)
    assert 1 + x == QQ.scalar(3, 2)
    assert 2 * x == QQ.one_scalar()
    assert x - 1 == QQ.scalar(-1, 2)
    assert 1 / x == QQ.scalar(2)
    assert x**2 == QQ.scalar(1, 4)
    assert x**-1 == QQ.scalar(2)


def test_cross_field_mixing_raises():
    with pytest.raises(FieldMismatch):
        QQ.scalar(1) + PrimeField(5).scalar(1)
    with pytest.raises(FieldMismatch):
        QQ.scalar(PrimeField(5).scalar(1))


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        QQ.scalar(1) / QQ.scalar(0)
    with pytest.raises(DivisionByZero):
        PrimeField(5).scalar(0).inverse()
    with pytest.raises(DivisionByZero):
        QQ.scalar(1, 0)


def test_prime_field_negative_pow():
    f = PrimeField(7)
    x = f.scalar(3)
    assert x**-1 == x.inverse()
    assert x**-2 == (x * x).inverse()


def test_field_json_forms():
    assert QQ.to_json_obj() == "Q"
    assert PrimeField(5).to_json_obj() == {"Fp": 5}
    assert field_from_json_obj("Q") == QQ
    assert field_from_json_obj({"Fp": 5}) == PrimeField(5)
    for bad in [None, "Fp", {"Fp": 4}, {"Fp": "5"}, {"Fp": 5, "x": 1}, 7, {"Fp": True}]:
        with pytest.raises(ParseError):
            field_from_json_obj(bad)


def test_field_equality_and_hash():
    assert PrimeField(5) == PrimeField(5)
    assert PrimeField(5) != PrimeField(7)
    assert QQ != PrimeField(5)
    assert hash(PrimeField(5)) == hash(PrimeField(5))
    assert len({QQ, PrimeField(5), PrimeField(5), QQ}) == 2


def test_scalar_str_is_wire_format():
    # str() output must be valid JSON content after json round-trip
    x = QQ.scalar(-7, 3)
    assert json.loads(json.dumps(str(x))) == "-7/3"
