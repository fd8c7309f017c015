"""Quasi-commutation relations and itemized identity suites.

Three relations between square matrices ``a`` and ``b`` over the same field
are recognized:

* ``LambdaCommute(lam)`` - ``a*b == lam*(b*a)`` with ``lam != 0``,
* ``CrossCube`` - ``a**3*b == b*a`` and ``b**3*a == a*b``,
* ``SwappedCube`` - ``a*b**3 == b*a`` and ``b*a**3 == a*b``.

Each suite re-checks its hypothesis, then evaluates a fixed catalog of
identities that follow from it, returning an :class:`IdentityReport` whose
items carry both sides of every identity as witnesses.  Items are evaluated
unconditionally (no short-circuit after a failure) and reported in
lexicographic identity-id order, so two runs, or two implementations, agree
on the ledger layout bit for bit.

Suite catalog (exponent arguments shown as ``i``, ``j``; ``T(i)`` is the
triangular number ``i*(i-1)/2``):

* ``L2.1`` - powers under lambda-commutation: ``a*b**i == lam**i*(b**i*a)``;
  ``a**i*b == lam**i*(b*a**i)``; ``(a*b)**i == lam**(-T(i))*(a**i*b**i)``;
  ``(b*a)**i == lam**T(i)*(b**i*a**i)``.
* ``L2.2`` - Drazin inverses under lambda-commutation, e.g.
  ``(a*b)^D == b^D*a^D == lam**-1*(a^D*b^D)``.
* ``L3.1`` - powers under the cross-cube relation, e.g.
  ``b*a**i == a**(3*i)*b`` and ``a*b == a**(26*i)*(a*b)*b**(2*i)``.
* ``L3.2`` - Drazin inverses under cross-cube (twelve mixed identities).
* ``L3.3`` - the swapped-cube relation: ``a^D*b^D == b**3*a`` and the
  group-inverse facts for ``a*b`` and ``b*a``.
* ``L3.4`` - two four-term product chains under cross-cube.
* ``L3.5`` - eight projector-absorption identities under cross-cube.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple, Union

from .drazin import drazin_inverse
from .errors import (
    ExponentOverflow,
    FieldMismatch,
    ParseError,
    PreconditionViolated,
    ShapeMismatch,
    ZeroLambda,
)
from .fields import FieldScalar
from .matrices import Matrix

__all__ = [
    "LambdaCommute",
    "CrossCube",
    "SwappedCube",
    "RelationKind",
    "IdentityItem",
    "IdentityReport",
    "check_relation",
    "first_violation",
    "require_relation",
    "relation_to_json_fields",
    "relation_from_json_fields",
    "det_consistency_diagnostic",
    "cube_exponent_cap",
    "lemma21_suite",
    "lemma22_suite",
    "lemma31_suite",
    "lemma32_suite",
    "lemma33_suite",
    "lemma34_suite",
    "lemma35_suite",
]


@dataclass(frozen=True)
class LambdaCommute:
    """``a*b == lam*(b*a)`` for a fixed nonzero scalar ``lam``."""

    lam: FieldScalar

    def __post_init__(self):
        if self.lam.is_zero():
            raise ZeroLambda("the commutation constant must be nonzero")


@dataclass(frozen=True)
class CrossCube:
    """``a**3*b == b*a`` and ``b**3*a == a*b``."""


@dataclass(frozen=True)
class SwappedCube:
    """``a*b**3 == b*a`` and ``b*a**3 == a*b``."""


RelationKind = Union[LambdaCommute, CrossCube, SwappedCube]

_RELATION_NAMES = {
    LambdaCommute: "lambda-commute",
    CrossCube: "cross-cube",
    SwappedCube: "swapped-cube",
}


def relation_to_json_fields(rel: RelationKind) -> Dict[str, Any]:
    """Flat JSON fields: ``{"relation": <kind>}`` plus ``"lambda"`` if any."""
    out: Dict[str, Any] = {"relation": _RELATION_NAMES[type(rel)]}
    if isinstance(rel, LambdaCommute):
        out["lambda"] = str(rel.lam)
    return out


def relation_from_json_fields(
    kind: Any, lam: Optional[FieldScalar], where: str = "relation"
) -> RelationKind:
    if kind == "lambda-commute":
        if lam is None:
            raise ParseError(f"{where}: lambda-commute needs a lambda value")
        return LambdaCommute(lam)
    if kind == "cross-cube":
        return CrossCube()
    if kind == "swapped-cube":
        return SwappedCube()
    raise ParseError(
        f"{where}: unknown relation {kind!r} "
        "(expected lambda-commute, cross-cube or swapped-cube)"
    )


def _validate_pair(a: Matrix, b: Matrix, rel: RelationKind) -> None:
    if a.field != b.field:
        raise FieldMismatch(
            f"pair mixes fields {a.field} and {b.field}"
        )
    if not (a.is_square() and b.is_square()):
        raise ShapeMismatch("relations are defined for square matrices")
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ShapeMismatch(
            f"pair mixes shapes {a.rows}x{a.cols} and {b.rows}x{b.cols}"
        )
    if isinstance(rel, LambdaCommute) and rel.lam.field != a.field:
        raise FieldMismatch(
            f"lambda lives over {rel.lam.field}, the pair over {a.field}"
        )


def _defining_equations(
    a: Matrix, b: Matrix, rel: RelationKind
) -> List[Tuple[str, Matrix, Matrix]]:
    if isinstance(rel, LambdaCommute):
        return [("a*b = lam*(b*a)", a * b, rel.lam * (b * a))]
    if isinstance(rel, CrossCube):
        return [
            ("a^3*b = b*a", a**3 * b, b * a),
            ("b^3*a = a*b", b**3 * a, a * b),
        ]
    return [
        ("a*b^3 = b*a", a * b**3, b * a),
        ("b*a^3 = a*b", b * a**3, a * b),
    ]


def check_relation(a: Matrix, b: Matrix, rel: RelationKind) -> bool:
    """True iff the defining equations of ``rel`` hold exactly for (a, b)."""
    _validate_pair(a, b, rel)
    return all(lhs == rhs for _, lhs, rhs in _defining_equations(a, b, rel))


def first_violation(a: Matrix, b: Matrix, rel: RelationKind) -> Optional[Dict[str, Any]]:
    """Locate the first entry (row-major) where a defining equation breaks."""
    _validate_pair(a, b, rel)
    for name, lhs, rhs in _defining_equations(a, b, rel):
        if lhs == rhs:
            continue
        for i in range(lhs.rows):
            for j in range(lhs.cols):
                le, re = lhs.entry(i, j), rhs.entry(i, j)
                if le != re:
                    return {
                        "equation": name,
                        "row": i,
                        "col": j,
                        "lhs": str(le),
                        "rhs": str(re),
                    }
    return None


def require_relation(a: Matrix, b: Matrix, rel: RelationKind) -> None:
    """Raise :class:`PreconditionViolated` locating the first broken entry."""
    violation = first_violation(a, b, rel)
    if violation is not None:
        name = _RELATION_NAMES[type(rel)]
        raise PreconditionViolated(
            f"pair does not satisfy {name}: {violation['equation']} fails at "
            f"entry ({violation['row']}, {violation['col']}): "
            f"{violation['lhs']} != {violation['rhs']}",
            violation,
        )


def det_consistency_diagnostic(
    a: Matrix, b: Matrix, lam: FieldScalar
) -> Optional[bool]:
    """For an invertible lambda-commuting pair, ``lam**n`` must equal 1.

    Returns None when either matrix is singular (no constraint), else
    whether ``lam**n == 1``.  A False return means no such pair can satisfy
    the relation, which is why generator families with two invertible
    matrices exist only for constants whose n-th power is 1.
    """
    _validate_pair(a, b, LambdaCommute(lam))
    n = a.rows
    if a.rank() < n or b.rank() < n:
        return None
    return lam**n == a.field.one_scalar()


@dataclass(frozen=True)
class IdentityItem:
    """One verified identity: both sides retained as failure witnesses."""

    identity_id: str
    lhs: Matrix
    rhs: Matrix
    passed: bool


@dataclass(frozen=True)
class IdentityReport:
    """Itemized outcome of one suite over one pair."""

    relation: RelationKind
    items: Tuple[IdentityItem, ...]
    all_pass: bool

    @classmethod
    def build(cls, relation: RelationKind, items: List[IdentityItem]) -> "IdentityReport":
        ordered = tuple(sorted(items, key=lambda it: it.identity_id))
        return cls(relation, ordered, all(it.passed for it in ordered))

    def failing_ids(self) -> List[str]:
        return [it.identity_id for it in self.items if not it.passed]

    def to_json_obj(self) -> dict:
        out: Dict[str, Any] = dict(relation_to_json_fields(self.relation))
        out["items"] = [
            {"id": it.identity_id, "pass": it.passed} for it in self.items
        ]
        out["all_pass"] = self.all_pass
        out["witnesses"] = {
            it.identity_id: {
                "lhs": it.lhs.to_json_obj(),
                "rhs": it.rhs.to_json_obj(),
            }
            for it in self.items
            if not it.passed
        }
        return out


def _add(items: List[IdentityItem], iid: str, lhs: Matrix, rhs: Matrix) -> None:
    items.append(IdentityItem(iid, lhs, rhs, lhs == rhs))


def _check_i_max(i_max: int) -> None:
    if not isinstance(i_max, int) or isinstance(i_max, bool) or i_max < 1:
        raise ValueError(f"i_max must be a positive integer, got {i_max!r}")


def cube_exponent_cap(field) -> int:
    # 3^i growth: rational entries explode, residues do not.
    return 4 if field.characteristic == 0 else 8


def lemma21_suite(
    a: Matrix, b: Matrix, lam: FieldScalar, i_max: int
) -> IdentityReport:
    """Power identities under ``a*b == lam*(b*a)``, for each i in 1..i_max."""
    _check_i_max(i_max)
    rel = LambdaCommute(lam)
    require_relation(a, b, rel)
    items: List[IdentityItem] = []
    for i in range(1, i_max + 1):
        tri = i * (i - 1) // 2
        _add(items, f"L2.1-1a-i{i:02d}", a * b**i, (lam**i) * (b**i * a))
        _add(items, f"L2.1-1b-i{i:02d}", a**i * b, (lam**i) * (b * a**i))
        _add(items, f"L2.1-2a-i{i:02d}", (a * b) ** i, (lam**-tri) * (a**i * b**i))
        _add(items, f"L2.1-2b-i{i:02d}", (b * a) ** i, (lam**tri) * (b**i * a**i))
    return IdentityReport.build(rel, items)


def lemma22_suite(a: Matrix, b: Matrix, lam: FieldScalar) -> IdentityReport:
    """Drazin-inverse identities under ``a*b == lam*(b*a)``.

    Catalog: ``a^D*b == lam**-1*(b*a^D)``; ``a*b^D == lam**-1*(b^D*a)``;
    ``(a*b)^D == b^D*a^D == lam**-1*(a^D*b^D)``; and the auxiliary
    projector commutations ``a*a^D`` with ``b`` and ``b*b^D`` with ``a``.
    """
    rel = LambdaCommute(lam)
    require_relation(a, b, rel)
    da = drazin_inverse(a).d
    db = drazin_inverse(b).d
    dab = drazin_inverse(a * b).d
    linv = lam.inverse()
    items: List[IdentityItem] = []
    _add(items, "L2.2-1", da * b, linv * (b * da))
    _add(items, "L2.2-2", a * db, linv * (db * a))
    _add(items, "L2.2-3a", dab, db * da)
    _add(items, "L2.2-3b", dab, linv * (da * db))
    _add(items, "L2.2-4a", (a * da) * b, b * (a * da))
    _add(items, "L2.2-4b", a * (b * db), (b * db) * a)
    return IdentityReport.build(rel, items)


def lemma31_suite(a: Matrix, b: Matrix, i_max: int) -> IdentityReport:
    """Power identities under the cross-cube relation, i in 1..i_max.

    Exponents reach ``3**i`` and ``26*i``, so ``i_max`` is capped (4 over
    the rationals, 8 over a prime field); beyond the cap raises
    :class:`ExponentOverflow`.  Matrix powers are honest square-and-multiply
    products; exponents are never reduced modulo anything.
    """
    _check_i_max(i_max)
    cap = cube_exponent_cap(a.field)
    if i_max > cap:
        raise ExponentOverflow(
            f"i_max {i_max} exceeds the 3^i growth cap {cap} over {a.field}",
            {"i_max": i_max, "cap": cap},
        )
    rel = CrossCube()
    require_relation(a, b, rel)
    items: List[IdentityItem] = []
    ab, ba = a * b, b * a
    for i in range(1, i_max + 1):
        _add(items, f"L3.1-1a-i{i:02d}", b * a**i, a ** (3 * i) * b)
        _add(items, f"L3.1-1b-i{i:02d}", b**i * a, a ** (3**i) * b**i)
        _add(items, f"L3.1-2a-i{i:02d}", a * b**i, b ** (3 * i) * a)
        _add(items, f"L3.1-2b-i{i:02d}", a**i * b, b ** (3**i) * a**i)
        _add(items, f"L3.1-3a-i{i:02d}", ab, a ** (26 * i) * ab * b ** (2 * i))
        _add(items, f"L3.1-3b-i{i:02d}", ba, b ** (26 * i) * ba * a ** (2 * i))
    return IdentityReport.build(rel, items)


def lemma32_suite(a: Matrix, b: Matrix) -> IdentityReport:
    """Drazin-inverse identities under the cross-cube relation (12 items)."""
    rel = CrossCube()
    require_relation(a, b, rel)
    da = drazin_inverse(a).d
    db = drazin_inverse(b).d
    aaD = a * da
    bbD = b * db
    items: List[IdentityItem] = []
    _add(items, "L3.2-1a", da**3 * b, b * da)
    _add(items, "L3.2-1b", db**3 * a, a * db)
    _add(items, "L3.2-2a", aaD * b, b * aaD)
    _add(items, "L3.2-2b", aaD * db, db * aaD)
    _add(items, "L3.2-3a", bbD * a, a * bbD)
    _add(items, "L3.2-3b", bbD * da, da * bbD)
    # 4b is the a<->b mirror of 4a; the one-sided product order matters on
    # noncommuting pairs (the finite-field search exhibits 24 of them at
    # p=3, n=2 where b*a^D = a^D*b**3 holds but a^D*b = a^D*b**3 fails).
    _add(items, "L3.2-4a", a * db, db * a**3)
    _add(items, "L3.2-4b", b * da, da * b**3)
    _add(items, "L3.2-5a", da * db, db * da**3)
    _add(items, "L3.2-5b", db * da, da * db**3)
    _add(items, "L3.2-6a", da * db, db * da * b**2)
    _add(items, "L3.2-6b", db * da, da * db * a**2)
    return IdentityReport.build(rel, items)


def lemma33_suite(a: Matrix, b: Matrix) -> IdentityReport:
    """Identities under the swapped-cube relation.

    Beyond the two product formulas and one auxiliary, the group-inverse
    claims ``(a*b)^# == b^D*a^D`` and ``(b*a)^# == a^D*b^D`` are certified
    by checking the three group-inverse equations for the candidate
    products (commutation, inner inverse, and ``x == x**2*g``, which pins
    the index to <= 1); uniqueness then forces the equality.
    """
    rel = SwappedCube()
    require_relation(a, b, rel)
    da = drazin_inverse(a).d
    db = drazin_inverse(b).d
    items: List[IdentityItem] = []
    _add(items, "L3.3-1", da * db, b**3 * a)
    _add(items, "L3.3-2", db * da, a**3 * b)
    _add(items, "L3.3-3", da * b, b * da**3)
    ab, ba = a * b, b * a
    g = db * da
    _add(items, "L3.3-4a", ab * g, g * ab)
    _add(items, "L3.3-4b", g * ab * g, g)
    _add(items, "L3.3-4c", ab, ab * ab * g)
    h = da * db
    _add(items, "L3.3-5a", ba * h, h * ba)
    _add(items, "L3.3-5b", h * ba * h, h)
    _add(items, "L3.3-5c", ba, ba * ba * h)
    return IdentityReport.build(rel, items)


def lemma34_suite(a: Matrix, b: Matrix) -> IdentityReport:
    """Two four-term chains under cross-cube, checked as eight equalities.

    Chain 1: ``a^D*b^D == (b^D)**3*a^D == b^D*a^D*a**2 == b**2*b^D*a^D``.
    Chain 2: ``b^D*a^D == (a^D)**3*b^D == a^D*b^D*b**2 == a**2*a^D*b^D``.
    Items 1a-1c/2a-2c are the consecutive equalities, 1d/2d close each
    chain end to end.
    """
    rel = CrossCube()
    require_relation(a, b, rel)
    da = drazin_inverse(a).d
    db = drazin_inverse(b).d
    x1 = da * db
    x2 = db**3 * da
    x3 = db * da * a**2
    x4 = b**2 * db * da
    y1 = db * da
    y2 = da**3 * db
    y3 = da * db * b**2
    y4 = a**2 * da * db
    items: List[IdentityItem] = []
    _add(items, "L3.4-1a", x1, x2)
    _add(items, "L3.4-1b", x2, x3)
    _add(items, "L3.4-1c", x3, x4)
    _add(items, "L3.4-1d", x1, x4)
    _add(items, "L3.4-2a", y1, y2)
    _add(items, "L3.4-2b", y2, y3)
    _add(items, "L3.4-2c", y3, y4)
    _add(items, "L3.4-2d", y1, y4)
    return IdentityReport.build(rel, items)


def lemma35_suite(a: Matrix, b: Matrix, i: int, j: int) -> IdentityReport:
    """Projector-absorption identities under cross-cube at exponents i, j.

    Parts 1 and 2 depend on (i, j); parts 3-8 are fixed:
    ``aa^D*a**(4+i)*b**j*bb^D == aa^D*a**i*b**j*bb^D``;
    ``aa^D*a**(2+i)*b**(2+j)*bb^D == aa^D*a**i*b**j*bb^D``;
    ``aa^D*a*b*b^D == a^D*(b^D)**2``; ``aa^D*a**3*b*b^D == a^D*b*b^D``;
    ``aa^D*a**2*b*b*b^D == aa^D*b^D``; ``aa^D*a*b**2*b*b^D == a^D*b*b^D``;
    ``a*b*(I - aa^D) == 0``; ``b*a*(I - bb^D) == 0``.
    """
    for name, v in (("i", i), ("j", j)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")
    rel = CrossCube()
    require_relation(a, b, rel)
    da = drazin_inverse(a).d
    db = drazin_inverse(b).d
    aaD = a * da
    bbD = b * db
    eye = Matrix.identity(a.field, a.rows)
    zero = Matrix.zero(a.field, a.rows)
    items: List[IdentityItem] = []
    rhs12 = aaD * a**i * b**j * bbD
    _add(items, "L3.5-1", aaD * a ** (4 + i) * b**j * bbD, rhs12)
    _add(items, "L3.5-2", aaD * a ** (2 + i) * b ** (2 + j) * bbD, rhs12)
    _add(items, "L3.5-3", aaD * a * b * db, da * db * db)
    _add(items, "L3.5-4", aaD * a**3 * b * db, da * b * db)
    _add(items, "L3.5-5", aaD * a**2 * b * b * db, aaD * db)
    _add(items, "L3.5-6", aaD * a * b**2 * b * db, da * b * db)
    _add(items, "L3.5-7", a * b * (eye - aaD), zero)
    _add(items, "L3.5-8", b * a * (eye - bbD), zero)
    return IdentityReport.build(rel, items)
