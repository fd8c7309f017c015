"""Drazin inverse: worked instances, certification, index, determinism."""

from random import Random

import pytest

from drazinkit import (
    IndexTooLarge,
    Matrix,
    PivotOrder,
    PrimeField,
    QQ,
    ShapeMismatch,
    certify,
    compute_index,
    drazin_inverse,
    group_inverse,
)

from _naive import drazin_axioms_hold, from_matrix

F5 = PrimeField(5)


def test_invertible_matrix():
    a = Matrix.diagonal(QQ, [2, 3])
    data = drazin_inverse(a)
    assert data.index == 0
    assert data.is_group
    assert data.d == Matrix.diagonal(QQ, ["1/2", "1/3"])
    assert data.pi.is_zero()


def test_diagonal_with_zero():
    # diag(2, 0): invertible core plus a vanished direction.
    a = Matrix.diagonal(QQ, [2, 0])
    data = drazin_inverse(a)
    assert data.index == 1
    assert data.is_group
    assert data.d == Matrix.diagonal(QQ, ["1/2", "0"])
    assert data.pi == Matrix.diagonal(QQ, [0, 1])


def test_nilpotent_shift():
    a = Matrix.from_rows(QQ, [[0, 1], [0, 0]])
    data = drazin_inverse(a)
    assert data.index == 2
    assert data.d.is_zero()
    assert data.pi.is_identity()
    assert not data.is_group


def test_zero_matrix_convention():
    data = drazin_inverse(Matrix.zero(QQ, 3))
    assert data.index == 1
    assert data.d.is_zero()
    assert data.pi.is_identity()
    assert data.is_group


def test_one_by_one():
    assert drazin_inverse(Matrix.from_rows(QQ, [[5]])).d == Matrix.from_rows(
        QQ, [["1/5"]]
    )
    assert drazin_inverse(Matrix.from_rows(QQ, [[0]])).index == 1


def test_certify_contract():
    a = Matrix.diagonal(QQ, [2, 0])
    good = Matrix.diagonal(QQ, ["1/2", "0"])
    bad = Matrix.diagonal(QQ, ["1/2", "1"])
    assert certify(a, good, 1)
    assert not certify(a, bad, 1)
    assert not certify(a, good, -1)
    with pytest.raises(ShapeMismatch):
        certify(a, Matrix.zero(QQ, 3), 1)
    with pytest.raises(ShapeMismatch):
        certify(Matrix.zero(QQ, 2, 3), good, 1)


def test_certify_rejects_wrong_field():
    a = Matrix.diagonal(QQ, [2, 0])
    assert not certify(a, Matrix.diagonal(F5, [3, 0]), 1)


def _shift(field, n: int) -> Matrix:
    return Matrix.from_rows(
        field, [[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)]
    )


def test_index_examples():
    assert compute_index(Matrix.identity(QQ, 4)) == 0
    for n in range(1, 6):
        assert compute_index(_shift(QQ, n)) == n
    blk = _shift(QQ, 3).direct_sum(Matrix.diagonal(QQ, [2, 5]))
    assert compute_index(blk) == 3
    with pytest.raises(ShapeMismatch):
        compute_index(Matrix.zero(QQ, 2, 3))


def test_group_inverse_accepts_index_leq_1():
    a = Matrix.diagonal(QQ, [3, 0, -2])
    data = group_inverse(a)
    assert data.is_group and data.index == 1
    with pytest.raises(IndexTooLarge) as exc:
        group_inverse(_shift(QQ, 2))
    assert exc.value.detail["index"] == 2


def _random_square(field, n: int, rng: Random) -> Matrix:
    kind = rng.randrange(4)
    if kind == 0:
        pool = [-2, -1, 0, 0, 1, 2] if field.characteristic == 0 else list(
            range(field.characteristic)
        )
        return Matrix.from_rows(
            field, [[rng.choice(pool) for _ in range(n)] for _ in range(n)]
        )
    if kind == 1:
        pool = [0, 0, 1, 2, -1] if field.characteristic == 0 else [0, 0, 1, 2]
        return Matrix.diagonal(field, [rng.choice(pool) for _ in range(n)])
    if kind == 2:
        k = rng.randint(1, n)
        m = _shift(field, k)
        if k < n:
            m = m.direct_sum(
                Matrix.diagonal(field, [rng.choice([1, 2, 3]) for _ in range(n - k)])
            )
        return m
    # strictly upper triangular plus diagonal: index visible in structure
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if j < i:
                row.append(0)
            elif j == i:
                row.append(rng.choice([0, 1, 2]))
            else:
                row.append(rng.choice([0, 1]))
        rows.append(row)
    return Matrix.from_rows(field, rows)


@pytest.mark.parametrize("field,p", [(QQ, None), (F5, 5)])
def test_randomized_axioms_and_determinism(field, p):
    """Certified axioms, rank-plateau index, pivot-order agreement.

    Also cross-checks the defining equations with the naive Fraction/int
    oracle, so the verdict does not depend on the package's own kernels.
    """
    rng = Random(60601 if p is None else 60602)
    for _ in range(60):
        a = _random_square(field, rng.randint(1, 5), rng)
        top = drazin_inverse(a, PivotOrder.TOP_DOWN)
        bot = drazin_inverse(a, PivotOrder.BOTTOM_UP)
        assert top.d == bot.d
        assert top.index == bot.index == compute_index(a)
        assert certify(a, top.d, top.index)
        assert drazin_axioms_hold(from_matrix(a), from_matrix(top.d), top.index, p)
        # spectral projector: idempotent, annihilates d
        assert top.pi * top.pi == top.pi
        assert (top.pi * top.d).is_zero()
        assert top.is_group == (top.index <= 1)


def test_double_drazin_property():
    # (a^D)^D == a^2 * a^D, a closed-form consequence of the axioms.
    rng = Random(911)
    for _ in range(25):
        a = _random_square(QQ, rng.randint(1, 4), rng)
        d = drazin_inverse(a).d
        assert drazin_inverse(d).d == a * a * d


def test_drazin_commutes_with_conjugation():
    rng = Random(314)
    from drazinkit import random_invertible

    for seed in range(10):
        a = _random_square(QQ, 4, rng)
        s = random_invertible(QQ, 4, seed)
        lhs = drazin_inverse(s * a * s.inverse()).d
        rhs = s * drazin_inverse(a).d * s.inverse()
        assert lhs == rhs


def test_non_square_rejected():
    with pytest.raises(ShapeMismatch):
        drazin_inverse(Matrix.zero(QQ, 2, 3))
