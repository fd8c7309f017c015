"""Drazin index, Drazin inverse, group inverse and spectral projector.

The Drazin inverse of a square matrix ``a`` is the unique ``d`` with::

    d * a * d == d        a * d == d * a        a**k == a**(k + 1) * d

where ``k`` is the Drazin index of ``a``: the smallest ``k >= 0`` with
``rank(a**k) == rank(a**(k + 1))`` (``a**0`` is the identity, so ``k == 0``
exactly when ``a`` is invertible, and ``d`` is then the ordinary inverse).

Construction: with ``l = max(k, 1)`` and ``G`` any inner inverse of
``a**(2l + 1)``, the product ``a**l * G * a**l`` is the Drazin inverse.
The result does not depend on which inner inverse was used, and every
computed inverse is certified against the three defining equations before
it is returned; a failed certificate raises
:class:`~drazinkit.errors.InternalCertificationFailure` since it can only
mean a bug, never bad input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexTooLarge, InternalCertificationFailure, ShapeMismatch
from .matrices import Matrix, PivotOrder

__all__ = ["DrazinData", "compute_index", "certify", "drazin_inverse", "group_inverse"]


@dataclass(frozen=True)
class DrazinData:
    """A certified Drazin inverse bundle.

    ``pi`` is the spectral projector ``I - a * d`` (idempotent, commutes
    with ``a``, and ``a * pi`` is nilpotent of degree ``max(index, 1)``).
    ``is_group`` records whether ``d`` is a group inverse, i.e. ``index <= 1``.
    """

    source: Matrix
    d: Matrix
    index: int
    pi: Matrix
    is_group: bool

    def to_json_obj(self) -> dict:
        return {
            "d": self.d.to_json_obj(),
            "index": self.index,
            "pi": self.pi.to_json_obj(),
            "is_group": self.is_group,
        }


def _require_square(a: Matrix, what: str) -> None:
    if not a.is_square():
        raise ShapeMismatch(f"{what} requires a square matrix, got {a.rows}x{a.cols}")


def compute_index(a: Matrix) -> int:
    """Drazin index: where the rank sequence ``rank(a**k)`` plateaus.

    The sequence ``n = rank(I) >= rank(a) >= rank(a**2) >= ...`` strictly
    decreases until it stabilizes, so the loop terminates within ``n``
    steps.  The zero matrix has index 1; the identity (any invertible
    matrix) has index 0.
    """
    _require_square(a, "the Drazin index")
    n = a.rows
    power = Matrix.identity(a.field, n)
    r_prev = n
    for k in range(n + 1):
        power = power * a
        r_next = power.rank()
        if r_next == r_prev:
            return k
        r_prev = r_next
    raise InternalCertificationFailure(
        "rank sequence failed to stabilize; this cannot happen"
    )


def certify(a: Matrix, candidate: Matrix, index: int) -> bool:
    """Check the three Drazin equations for ``candidate`` at ``index``.

    Pure predicate, no exceptions for a wrong candidate: returns False.
    """
    _require_square(a, "certification")
    if (candidate.rows, candidate.cols) != (a.rows, a.cols):
        raise ShapeMismatch("candidate shape differs from the source matrix")
    if candidate.field != a.field:
        return False
    if index < 0:
        return False
    ad = a * candidate
    if ad != candidate * a:
        return False
    if candidate * ad != candidate:
        return False
    return a**index == a ** (index + 1) * candidate


def _assemble(a: Matrix, index: int, order: PivotOrder) -> DrazinData:
    l = max(index, 1)
    g = (a ** (2 * l + 1)).inner_inverse(order)
    al = a**l
    d = al * g * al
    if not certify(a, d, index):
        raise InternalCertificationFailure(
            "constructed Drazin inverse failed its own certificate"
        )
    pi = Matrix.identity(a.field, a.rows) - a * d
    return DrazinData(source=a, d=d, index=index, pi=pi, is_group=index <= 1)


def drazin_inverse(a: Matrix, order: PivotOrder = PivotOrder.TOP_DOWN) -> DrazinData:
    """Compute and certify the Drazin inverse of ``a``.

    ``order`` selects the pivot order used for the intermediate inner
    inverse; it changes the intermediate, never the result.
    """
    _require_square(a, "the Drazin inverse")
    return _assemble(a, compute_index(a), order)


def group_inverse(a: Matrix, order: PivotOrder = PivotOrder.TOP_DOWN) -> DrazinData:
    """Drazin inverse restricted to index <= 1; raises IndexTooLarge otherwise."""
    _require_square(a, "the group inverse")
    k = compute_index(a)
    if k > 1:
        raise IndexTooLarge(f"group inverse needs index <= 1, got index {k}", k)
    return _assemble(a, k, order)
