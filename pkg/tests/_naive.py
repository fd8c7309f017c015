"""Independent naive oracles for the test suite.

Everything here is deliberately written against plain ``fractions.Fraction``
and ``int`` lists, with no imports from the package's kernels, so that the
library's matrix arithmetic is cross-checked by a second implementation.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Union

Num = Union[Fraction, int]
Rows = List[List[Num]]


def from_matrix(m) -> Rows:
    """Convert a package Matrix to naive rows (Fraction over Q, int mod p)."""
    if m.field.characteristic == 0:
        return [[Fraction(str(x)) for x in row] for row in m.to_rows()]
    return [[int(str(x)) for x in row] for row in m.to_rows()]


def eye(n: int) -> Rows:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def eye_mod(n: int) -> Rows:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(x: Rows, y: Rows, p: Optional[int] = None) -> Rows:
    rows, inner, cols = len(x), len(y), len(y[0])
    out = []
    for i in range(rows):
        acc = []
        for j in range(cols):
            s: Num = 0
            for k in range(inner):
                s = s + x[i][k] * y[k][j]
            acc.append(s % p if p is not None else s)
        out.append(acc)
    return out


def matpow(x: Rows, e: int, p: Optional[int] = None) -> Rows:
    n = len(x)
    result = eye_mod(n) if p is not None else eye(n)
    for _ in range(e):
        result = matmul(result, x, p)
    return result


def add(x: Rows, y: Rows, p: Optional[int] = None) -> Rows:
    return [
        [(a + b) % p if p is not None else a + b for a, b in zip(r1, r2)]
        for r1, r2 in zip(x, y)
    ]


def sub(x: Rows, y: Rows, p: Optional[int] = None) -> Rows:
    return [
        [(a - b) % p if p is not None else a - b for a, b in zip(r1, r2)]
        for r1, r2 in zip(x, y)
    ]


def eq(x: Rows, y: Rows) -> bool:
    return x == y


def _inv_mod(v: int, p: int) -> int:
    return pow(v, p - 2, p)


def rank(x: Rows, p: Optional[int] = None) -> int:
    """Row-reduction rank; fresh implementation, column-major pivoting."""
    m = [list(row) for row in x]
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if m[i][c] % p if p is not None else m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = _inv_mod(m[r][c] % p, p) if p is not None else Fraction(1) / m[r][c]
        m[r] = [(v * inv) % p if p is not None else v * inv for v in m[r]]
        for i in range(rows):
            if i != r:
                f = m[i][c] % p if p is not None else m[i][c]
                if f:
                    m[i] = [
                        (u - f * v) % p if p is not None else u - f * v
                        for u, v in zip(m[i], m[r])
                    ]
        r += 1
        if r == rows:
            break
    return r


def drazin_axioms_hold(a: Rows, d: Rows, k: int, p: Optional[int] = None) -> bool:
    """The three defining equations, checked with naive arithmetic only."""
    if matmul(a, d, p) != matmul(d, a, p):
        return False
    if matmul(matmul(d, a, p), d, p) != d:
        return False
    ak = matpow(a, k, p)
    if ak != matmul(matpow(a, k + 1, p), d, p):
        return False
    return True
