"""Matrix-pair generators: structured families and exhaustive search.

Every suite in this library runs over pairs produced here.  Structured
families build pairs that satisfy a relation by construction; the
exhaustive search enumerates *all* pairs over a small prime field and is
the independent oracle that the structured families cannot be (it finds
genuinely noncommuting examples nobody would write by hand).  Either way,
each emitted pair is re-checked against its relation before it leaves this
module; a failure raises InternalCertificationFailure because it can only
be a generator bug.

Families
--------
* ``WeightedShift(n)`` (lambda-commute only): ``a`` is the upper shift,
  ``b = diag(lam**0, ..., lam**(n-1))``; then ``a*b == lam*(b*a)`` with
  ``ind(a) == n`` and ``b`` invertible.
* ``DiagTripotents(n, pattern)``: commuting diagonal tripotents (entries
  in {-1, 0, 1}); satisfies the cross-cube and swapped-cube relations and
  lambda-commutation with ``lam == 1``.
* ``ScalarTimesIdentity(n, scale)``: ``a = scale*I`` with a random
  invertible diagonal ``b`` (lambda-commute, ``lam == 1``) or a random
  diagonal tripotent ``b`` (cube relations, ``scale`` in {1, -1}).
* ``DirectSum(left, right)`` and ``Conjugated(inner, seed)``: closure
  combinators; both preserve every relation.
* ``TrivialZeroB(n)``: ``b = 0`` with a structured random ``a`` (mixes
  invertible, diagonal, nilpotent-block and dense shapes so indices vary).
* ``ExhaustiveHit(p, n, ordinal)``: the ordinal-th hit of the exhaustive
  search over F_p, in its canonical order.

Determinism: generation is a pure function of (family, relation, seed),
and search output is independent of the number of parallel jobs.
"""

from __future__ import annotations

import itertools
import multiprocessing
from dataclasses import dataclass
from functools import lru_cache
from random import Random
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .errors import (
    BudgetExceeded,
    FieldMismatch,
    IncompatibleFamily,
    InternalCertificationFailure,
    ParseError,
)
from .fields import Field, FieldScalar, PrimeField, QQ
from .matrices import Matrix
from .relations import (
    CrossCube,
    LambdaCommute,
    RelationKind,
    SwappedCube,
    check_relation,
    relation_from_json_fields,
    relation_to_json_fields,
)

__all__ = [
    "WeightedShift",
    "DiagTripotents",
    "ScalarTimesIdentity",
    "DirectSum",
    "Conjugated",
    "TrivialZeroB",
    "ExhaustiveHit",
    "PairFamily",
    "SearchSpec",
    "CorpusPair",
    "describe_family",
    "gen_lambda_pair",
    "gen_cube_pair",
    "gen_swapped_pair",
    "random_invertible",
    "exhaustive_search",
    "cached_hits",
    "default_lambda_values",
    "default_lambda_corpus",
    "default_cube_corpus",
    "exhaustive_hits_corpus",
    "corpus_to_json_obj",
    "corpus_from_json_obj",
    "DEFAULT_SEARCH_BUDGET",
]

DEFAULT_SEARCH_BUDGET = 10_000_000

_TRIPOTENT_ENTRIES = (-1, 0, 1)


@dataclass(frozen=True)
class WeightedShift:
    n: int


@dataclass(frozen=True)
class DiagTripotents:
    n: int
    # None means: draw both diagonals from {-1, 0, 1} with the seed.
    pattern: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None


@dataclass(frozen=True)
class ScalarTimesIdentity:
    n: int
    scale: int = -1


@dataclass(frozen=True)
class DirectSum:
    left: "PairFamily"
    right: "PairFamily"


@dataclass(frozen=True)
class Conjugated:
    inner: "PairFamily"
    seed: int


@dataclass(frozen=True)
class TrivialZeroB:
    n: int


@dataclass(frozen=True)
class ExhaustiveHit:
    p: int
    n: int
    ordinal: int


PairFamily = Union[
    WeightedShift,
    DiagTripotents,
    ScalarTimesIdentity,
    DirectSum,
    Conjugated,
    TrivialZeroB,
    ExhaustiveHit,
]


def describe_family(family: PairFamily) -> str:
    """Stable provenance string for corpus files and reports."""
    if isinstance(family, WeightedShift):
        return f"weighted-shift(n={family.n})"
    if isinstance(family, DiagTripotents):
        if family.pattern is None:
            return f"diag-tripotents(n={family.n}, seeded)"
        pa = ",".join(str(x) for x in family.pattern[0])
        pb = ",".join(str(x) for x in family.pattern[1])
        return f"diag-tripotents(n={family.n}, a=[{pa}], b=[{pb}])"
    if isinstance(family, ScalarTimesIdentity):
        return f"scalar-identity(n={family.n}, scale={family.scale})"
    if isinstance(family, DirectSum):
        return f"direct-sum({describe_family(family.left)}, {describe_family(family.right)})"
    if isinstance(family, Conjugated):
        return f"conjugated({describe_family(family.inner)}, seed={family.seed})"
    if isinstance(family, TrivialZeroB):
        return f"zero-b(n={family.n})"
    if isinstance(family, ExhaustiveHit):
        return f"exhaustive(p={family.p}, n={family.n}, ordinal={family.ordinal})"
    raise IncompatibleFamily(f"unknown family {family!r}")


# --------------------------------------------------------------------------
# seeded building blocks
# --------------------------------------------------------------------------


def _mix(seed: int, salt: int) -> int:
    # Deterministic child-seed derivation; keeps sibling streams apart.
    return (seed * 1_000_003 + salt * 7_919 + 12_345) % (2**31)


def _rand_unit(field: Field, rng: Random):
    # A random invertible scalar, as a raw field value.
    if field.characteristic == 0:
        num = rng.choice((1, 2, 3, -1, -2, 5))
        den = rng.choice((1, 1, 2, 3))
        return field.scalar(num, den).value if den != 1 else field.from_int(num)
    return rng.randrange(1, field.characteristic)


def _rand_entry(field: Field, rng: Random):
    if field.characteristic == 0:
        return field.from_int(rng.randint(-3, 3))
    return rng.randrange(field.characteristic)


def random_invertible(field: Field, n: int, seed: int) -> Matrix:
    """Seeded invertible matrix: permutation times unit triangulars.

    The construction P*L*U with unit diagonals has determinant +-1, so it
    is invertible over every field regardless of the entries drawn.
    """
    rng = Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    z, o = field.zero, field.one
    p_rows = tuple(
        tuple(o if j == perm[i] else z for j in range(n)) for i in range(n)
    )
    lower = [[o if i == j else z for j in range(n)] for i in range(n)]
    upper = [[o if i == j else z for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            if rng.random() < 0.6:
                lower[i][j] = _rand_entry(field, rng)
        for j in range(i + 1, n):
            if rng.random() < 0.6:
                upper[i][j] = _rand_entry(field, rng)
    pm = Matrix(field, p_rows)
    lm = Matrix(field, tuple(tuple(r) for r in lower))
    um = Matrix(field, tuple(tuple(r) for r in upper))
    return pm * lm * um


def _structured_square(field: Field, n: int, seed: int) -> Matrix:
    """Seeded square matrix mixing index profiles (for the b = 0 family)."""
    rng = Random(seed)
    kind = rng.choice(("invertible", "diagonal", "nilpotent-mix", "dense"))
    if n == 1 and kind == "nilpotent-mix":
        kind = "diagonal"
    if kind == "invertible":
        return random_invertible(field, n, _mix(seed, 1))
    if kind == "diagonal":
        return Matrix.diagonal(
            field,
            [FieldScalar(field, _rand_entry(field, rng)) for _ in range(n)],
        )
    if kind == "nilpotent-mix":
        k = rng.randint(2, min(3, n)) if n >= 2 else 1
        z, o = field.zero, field.one
        jordan = Matrix(
            field,
            tuple(
                tuple(o if j == i + 1 else z for j in range(k)) for i in range(k)
            ),
        )
        if k == n:
            return jordan
        tail = Matrix.diagonal(
            field, [FieldScalar(field, _rand_unit(field, rng)) for _ in range(n - k)]
        )
        return jordan.direct_sum(tail)
    return Matrix.from_rows(
        field,
        [
            [FieldScalar(field, _rand_entry(field, rng)) for _ in range(n)]
            for _ in range(n)
        ],
    )


def _seeded_tripotent_diag(field: Field, n: int, rng: Random) -> Matrix:
    return Matrix.diagonal(field, [rng.choice(_TRIPOTENT_ENTRIES) for _ in range(n)])


# --------------------------------------------------------------------------
# family dispatch
# --------------------------------------------------------------------------


def _gen_pair(
    family: PairFamily, rel: RelationKind, field: Field, seed: int
) -> Tuple[Matrix, Matrix]:
    if isinstance(family, WeightedShift):
        if not isinstance(rel, LambdaCommute):
            raise IncompatibleFamily(
                "weighted-shift pairs only satisfy lambda-commutation"
            )
        n = family.n
        z, o = field.zero, field.one
        a = Matrix(
            field,
            tuple(tuple(o if j == i + 1 else z for j in range(n)) for i in range(n)),
        )
        b = Matrix.diagonal(field, [rel.lam**i for i in range(n)])
        return a, b

    if isinstance(family, DiagTripotents):
        if isinstance(rel, LambdaCommute) and rel.lam != 1:
            raise IncompatibleFamily(
                "diagonal tripotents commute, so lambda must be 1"
            )
        if family.pattern is None:
            rng = Random(_mix(seed, 3))
            a = _seeded_tripotent_diag(field, family.n, rng)
            b = _seeded_tripotent_diag(field, family.n, rng)
            return a, b
        pa, pb = family.pattern
        if len(pa) != family.n or len(pb) != family.n:
            raise IncompatibleFamily("pattern length differs from n")
        if any(x not in _TRIPOTENT_ENTRIES for x in pa + pb):
            raise IncompatibleFamily("tripotent patterns use entries -1, 0, 1 only")
        return Matrix.diagonal(field, pa), Matrix.diagonal(field, pb)

    if isinstance(family, ScalarTimesIdentity):
        n, scale = family.n, family.scale
        if field.from_int(scale) == field.zero:
            raise IncompatibleFamily("scale must be a unit of the field")
        a = Matrix.diagonal(field, [scale] * n)
        rng = Random(_mix(seed, 5))
        if isinstance(rel, LambdaCommute):
            if rel.lam != 1:
                raise IncompatibleFamily(
                    "scalar multiples of I commute, so lambda must be 1"
                )
            b = Matrix.diagonal(
                field, [FieldScalar(field, _rand_unit(field, rng)) for _ in range(n)]
            )
            return a, b
        if scale not in (1, -1):
            raise IncompatibleFamily(
                "cube relations need a**3 == a, so scale must be 1 or -1"
            )
        return a, _seeded_tripotent_diag(field, n, rng)

    if isinstance(family, DirectSum):
        a1, b1 = _gen_pair(family.left, rel, field, _mix(seed, 11))
        a2, b2 = _gen_pair(family.right, rel, field, _mix(seed, 13))
        return a1.direct_sum(a2), b1.direct_sum(b2)

    if isinstance(family, Conjugated):
        a0, b0 = _gen_pair(family.inner, rel, field, seed)
        s = random_invertible(field, a0.rows, family.seed)
        s_inv = s.inverse()
        return s * a0 * s_inv, s * b0 * s_inv

    if isinstance(family, TrivialZeroB):
        a = _structured_square(field, family.n, _mix(seed, 17))
        return a, Matrix.zero(field, family.n)

    if isinstance(family, ExhaustiveHit):
        hit_field = PrimeField(family.p)
        if field != hit_field:
            raise IncompatibleFamily(
                f"exhaustive hits live over F_{family.p}, not {field}"
            )
        hits = cached_hits(family.p, family.n, rel, True)
        if not 0 <= family.ordinal < len(hits):
            raise IncompatibleFamily(
                f"ordinal {family.ordinal} out of range: "
                f"{len(hits)} nontrivial hits at p={family.p}, n={family.n}"
            )
        return hits[family.ordinal]

    raise IncompatibleFamily(f"unknown family {family!r}")


def _certified(
    family: PairFamily, rel: RelationKind, field: Field, seed: int
) -> Tuple[Matrix, Matrix]:
    a, b = _gen_pair(family, rel, field, seed)
    if not check_relation(a, b, rel):
        raise InternalCertificationFailure(
            f"family {describe_family(family)} emitted a pair violating its relation"
        )
    return a, b


def gen_lambda_pair(
    family: PairFamily, lam: FieldScalar, seed: int
) -> Tuple[Matrix, Matrix]:
    """Pair with ``a*b == lam*(b*a)``; deterministic in (family, lam, seed)."""
    rel = LambdaCommute(lam)
    return _certified(family, rel, lam.field, seed)


def gen_cube_pair(
    family: PairFamily, seed: int, field: Field = QQ
) -> Tuple[Matrix, Matrix]:
    """Pair with ``a**3*b == b*a`` and ``b**3*a == a*b`` over ``field``."""
    return _certified(family, CrossCube(), field, seed)


def gen_swapped_pair(
    family: PairFamily, seed: int, field: Field = QQ
) -> Tuple[Matrix, Matrix]:
    """Pair with ``a*b**3 == b*a`` and ``b*a**3 == a*b`` over ``field``."""
    return _certified(family, SwappedCube(), field, seed)


# --------------------------------------------------------------------------
# exhaustive search
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchSpec:
    """Full enumeration space: all (a, b) with entries from a subset of F_p.

    ``n`` is capped at 3 (the space grows as ``d**(2*n*n)``).  When
    ``require_nontrivial`` is set, hits with ``a*b == 0`` are dropped
    (which also drops every ``b == 0`` hit).
    """

    p: int
    n: int
    relation: RelationKind
    entry_bound: Optional[Tuple[int, ...]] = None
    require_nontrivial: bool = False

    def __post_init__(self):
        field = PrimeField(self.p)  # validates primality
        if not isinstance(self.n, int) or not 1 <= self.n <= 3:
            raise ValueError(f"search dimension must be 1..3, got {self.n!r}")
        if self.entry_bound is not None:
            cleaned = tuple(sorted(set(self.entry_bound)))
            if not cleaned:
                raise ValueError("entry_bound must be nonempty")
            for v in cleaned:
                if not isinstance(v, int) or not 0 <= v < self.p:
                    raise ValueError(
                        f"entry_bound value {v!r} is not a residue mod {self.p}"
                    )
            object.__setattr__(self, "entry_bound", cleaned)
        if isinstance(self.relation, LambdaCommute):
            if self.relation.lam.field != field:
                raise FieldMismatch(
                    f"search relation lambda must live over F_{self.p}"
                )

    def domain(self) -> Tuple[int, ...]:
        return self.entry_bound if self.entry_bound is not None else tuple(range(self.p))

    def space_size(self) -> int:
        return len(self.domain()) ** (2 * self.n * self.n)


def _flat_mul(x: Tuple[int, ...], y: Tuple[int, ...], n: int, p: int) -> Tuple[int, ...]:
    out = []
    for i in range(n):
        base = i * n
        for j in range(n):
            s = 0
            for k in range(n):
                s += x[base + k] * y[k * n + j]
            out.append(s % p)
    return tuple(out)


def _products_equal(
    x: Tuple[int, ...],
    y: Tuple[int, ...],
    u: Tuple[int, ...],
    v: Tuple[int, ...],
    n: int,
    p: int,
) -> bool:
    # Entrywise comparison of x*y against u*v with early exit.
    for i in range(n):
        base = i * n
        for j in range(n):
            s = 0
            t = 0
            for k in range(n):
                kj = k * n + j
                s += x[base + k] * y[kj]
                t += u[base + k] * v[kj]
            if (s - t) % p:
                return False
    return True


def _relation_holds_flat(
    rel: RelationKind,
    a: Tuple[int, ...],
    a3: Tuple[int, ...],
    b: Tuple[int, ...],
    b3: Tuple[int, ...],
    n: int,
    p: int,
    lam_value: Optional[int],
) -> bool:
    if lam_value is not None:
        for i in range(n):
            base = i * n
            for j in range(n):
                s = 0
                t = 0
                for k in range(n):
                    kj = k * n + j
                    s += a[base + k] * b[kj]
                    t += b[base + k] * a[kj]
                if (s - lam_value * t) % p:
                    return False
        return True
    if isinstance(rel, CrossCube):
        return _products_equal(a3, b, b, a, n, p) and _products_equal(
            b3, a, a, b, n, p
        )
    return _products_equal(a, b3, b, a, n, p) and _products_equal(
        b, a3, a, b, n, p
    )


def _search_shard(args: Tuple[SearchSpec, int]) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """All hits whose first matrix starts with the given leading entry."""
    spec, lead = args
    p, n = spec.p, spec.n
    nn = n * n
    domain = spec.domain()
    rel = spec.relation
    lam_value = rel.lam.value if isinstance(rel, LambdaCommute) else None
    needs_cubes = lam_value is None
    b_pool = [
        (b, _flat_mul(_flat_mul(b, b, n, p), b, n, p) if needs_cubes else ())
        for b in itertools.product(domain, repeat=nn)
    ]
    hits = []
    for rest in itertools.product(domain, repeat=nn - 1):
        a = (lead,) + rest
        a3 = _flat_mul(_flat_mul(a, a, n, p), a, n, p) if needs_cubes else ()
        for b, b3 in b_pool:
            if not _relation_holds_flat(rel, a, a3, b, b3, n, p, lam_value):
                continue
            if spec.require_nontrivial:
                if all(v == 0 for v in _flat_mul(a, b, n, p)):
                    continue
            hits.append((a, b))
    return hits


def _unflatten(field: PrimeField, flat: Tuple[int, ...], n: int) -> Matrix:
    return Matrix(field, tuple(flat[i * n : (i + 1) * n] for i in range(n)))


def exhaustive_search(
    spec: SearchSpec, jobs: int = 1, budget: Optional[int] = None
) -> List[Tuple[Matrix, Matrix]]:
    """Every pair in the search space satisfying the relation, in order.

    Output is ordered lexicographically by the row-major entry tuple of
    ``a`` then ``b`` and is byte-identical for any ``jobs`` count: the
    space is sharded on the leading entry of ``a`` and shard results are
    concatenated in domain order.  Raises BudgetExceeded before touching
    the space if its size exceeds ``budget``.
    """
    limit = DEFAULT_SEARCH_BUDGET if budget is None else budget
    size = spec.space_size()
    if size > limit:
        raise BudgetExceeded(
            f"search space has {size} pairs, over the budget of {limit}",
            size,
            limit,
        )
    domain = spec.domain()
    shard_args = [(spec, lead) for lead in domain]
    if jobs <= 1 or len(shard_args) == 1:
        chunks = [_search_shard(arg) for arg in shard_args]
    else:
        # Prefer fork: it needs no __main__ re-import in the workers, so the
        # search stays usable from any host program.  Spawn is the fallback.
        methods = multiprocessing.get_all_start_methods()
        ctx = multiprocessing.get_context("fork" if "fork" in methods else "spawn")
        with ctx.Pool(min(jobs, len(shard_args))) as pool:
            chunks = pool.map(_search_shard, shard_args)
    field = PrimeField(spec.p)
    return [
        (_unflatten(field, fa, spec.n), _unflatten(field, fb, spec.n))
        for chunk in chunks
        for fa, fb in chunk
    ]


@lru_cache(maxsize=32)
def _cached_hits_impl(
    p: int, n: int, relation: RelationKind, require_nontrivial: bool
) -> Tuple[Tuple[Matrix, Matrix], ...]:
    spec = SearchSpec(p=p, n=n, relation=relation, require_nontrivial=require_nontrivial)
    return tuple(exhaustive_search(spec))


def cached_hits(
    p: int, n: int, relation: RelationKind, require_nontrivial: bool = True
) -> Tuple[Tuple[Matrix, Matrix], ...]:
    """Memoized single-process search, for corpus builders and families."""
    return _cached_hits_impl(p, n, relation, require_nontrivial)


# --------------------------------------------------------------------------
# corpora
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusPair:
    a: Matrix
    b: Matrix
    relation: RelationKind
    provenance: str


def corpus_to_json_obj(pairs: Sequence[CorpusPair]) -> list:
    out = []
    for cp in pairs:
        entry: Dict[str, Any] = {
            "a": cp.a.to_json_obj(),
            "b": cp.b.to_json_obj(),
            "provenance": cp.provenance,
        }
        entry.update(relation_to_json_fields(cp.relation))
        out.append(entry)
    return out


def corpus_from_json_obj(obj: Any, where: str = "corpus") -> List[CorpusPair]:
    if not isinstance(obj, list):
        raise ParseError(f"{where}: expected a JSON array", {"at": where})
    pairs = []
    for idx, item in enumerate(obj):
        loc = f"{where}[{idx}]"
        if not isinstance(item, dict):
            raise ParseError(f"{loc}: expected an object", {"at": loc})
        for key in ("a", "b", "relation"):
            if key not in item:
                raise ParseError(f"{loc}: missing key {key!r}", {"at": loc})
        a = Matrix.from_json_obj(item["a"], f"{loc}.a")
        b = Matrix.from_json_obj(item["b"], f"{loc}.b")
        lam = None
        if "lambda" in item and item["lambda"] is not None:
            if not isinstance(item["lambda"], str):
                raise ParseError(
                    f"{loc}.lambda: expected a string scalar", {"at": f"{loc}.lambda"}
                )
            lam = a.field.parse(item["lambda"])
        rel = relation_from_json_fields(item["relation"], lam, f"{loc}.relation")
        provenance = item.get("provenance", "unknown")
        if not isinstance(provenance, str):
            raise ParseError(
                f"{loc}.provenance: expected a string", {"at": f"{loc}.provenance"}
            )
        pairs.append(CorpusPair(a, b, rel, provenance))
    return pairs


def default_lambda_values(field: Field) -> List[FieldScalar]:
    """The commutation constants exercised by the default corpus."""
    if field.characteristic == 0:
        return [
            field.scalar(2),
            field.scalar(3),
            field.scalar(1, 2),
            field.scalar(1),
        ]
    p = field.characteristic
    if p <= 7:
        return [field.scalar(v) for v in range(1, p)]
    return [field.scalar(v) for v in (1, 2, 3)]


def _lambda_families(lam_is_one: bool, li: int) -> List[PairFamily]:
    fams: List[PairFamily] = [WeightedShift(n) for n in (2, 3, 4, 5)]
    fams += [
        Conjugated(WeightedShift(n), 100 + 10 * li + n) for n in (2, 3, 4)
    ]
    fams += [
        Conjugated(WeightedShift(n), 900 + 10 * li + n) for n in (2, 3)
    ]
    fams += [
        DirectSum(WeightedShift(2), WeightedShift(3)),
        DirectSum(WeightedShift(2), WeightedShift(2)),
        DirectSum(WeightedShift(3), WeightedShift(3)),
        Conjugated(DirectSum(WeightedShift(3), WeightedShift(2)), 300 + li),
        DirectSum(WeightedShift(2), TrivialZeroB(1)),
        Conjugated(DirectSum(WeightedShift(2), TrivialZeroB(1)), 400 + li),
    ]
    fams += [TrivialZeroB(n) for n in (1, 2, 3)]
    fams += [
        Conjugated(TrivialZeroB(2), 500 + li),
        Conjugated(TrivialZeroB(3), 550 + li),
        Conjugated(WeightedShift(5), 950 + li),
        Conjugated(DirectSum(WeightedShift(2), WeightedShift(2)), 960 + li),
        DirectSum(WeightedShift(4), TrivialZeroB(2)),
        DirectSum(TrivialZeroB(1), WeightedShift(3)),
        Conjugated(DirectSum(WeightedShift(4), TrivialZeroB(1)), 970 + li),
    ]
    if lam_is_one:
        fams += [
            ScalarTimesIdentity(2, 2),
            ScalarTimesIdentity(3, -1),
            Conjugated(ScalarTimesIdentity(2, 3), 600),
            DiagTripotents(2, ((1, 0), (-1, 0))),
            DiagTripotents(3, ((1, -1, 0), (0, 1, -1))),
            Conjugated(DiagTripotents(3, None), 700),
        ]
    return fams


def default_lambda_corpus(field: Field) -> List[CorpusPair]:
    """Deterministic lambda-commuting corpus over ``field`` (>= 100 pairs).

    Index coverage by construction: weighted shifts give (ind(a), ind(b))
    = (n, 0); the lam == 1 block adds invertible/invertible and
    tripotent/tripotent profiles; shift (+) zero-b direct sums give
    (2, 1).
    """
    pairs: List[CorpusPair] = []
    for li, lam in enumerate(default_lambda_values(field)):
        one = lam == 1
        for fi, fam in enumerate(_lambda_families(one, li)):
            seed = 10_000 * (li + 1) + 100 * fi + 7
            a, b = gen_lambda_pair(fam, lam, seed)
            pairs.append(
                CorpusPair(a, b, LambdaCommute(lam), describe_family(fam))
            )
    return pairs


_CUBE_FAMILIES: List[PairFamily] = [
    DiagTripotents(3, ((1, -1, 0), (-1, 1, 1))),
    DiagTripotents(2, ((1, 0), (0, 1))),
    DiagTripotents(2, ((1, -1), (1, 1))),
    DiagTripotents(4, ((1, -1, 0, 1), (-1, 0, 1, 1))),
    DiagTripotents(4, None),
    DiagTripotents(5, ((1, -1, 0, 1, -1), (0, 1, 1, -1, 1))),
    DiagTripotents(5, None),
    ScalarTimesIdentity(2, 1),
    ScalarTimesIdentity(3, -1),
    ScalarTimesIdentity(4, -1),
    TrivialZeroB(1),
    TrivialZeroB(2),
    TrivialZeroB(3),
    TrivialZeroB(4),
    Conjugated(DiagTripotents(3, ((1, -1, 0), (-1, 1, 1))), 31),
    Conjugated(DiagTripotents(4, None), 37),
    Conjugated(ScalarTimesIdentity(3, -1), 41),
    Conjugated(TrivialZeroB(3), 43),
    DirectSum(DiagTripotents(2, ((1, 0), (0, 1))), TrivialZeroB(2)),
    DirectSum(ScalarTimesIdentity(2, 1), DiagTripotents(3, ((1, -1, 0), (-1, 1, 1)))),
    Conjugated(DirectSum(DiagTripotents(2, ((1, -1), (1, 1))), TrivialZeroB(1)), 47),
]


def default_cube_corpus(
    field: Field, relation: RelationKind = CrossCube()
) -> List[CorpusPair]:
    """Deterministic corpus for the cube relations over ``field``.

    The same commutativity-based families satisfy both the cross-cube and
    the swapped-cube relation, so ``relation`` selects which one the pairs
    are certified (and labeled) against.  Genuinely noncommuting pairs are
    *not* generated here; they come from :func:`exhaustive_hits_corpus`.
    """
    if isinstance(relation, LambdaCommute):
        raise IncompatibleFamily("cube corpus needs a cube relation")
    pairs: List[CorpusPair] = []
    for fi, fam in enumerate(_CUBE_FAMILIES):
        seed = 20_000 + 100 * fi + 3
        a, b = _certified(fam, relation, field, seed)
        pairs.append(CorpusPair(a, b, relation, describe_family(fam)))
    return pairs


def exhaustive_hits_corpus(
    p: int = 3, n_max: int = 2, relation: RelationKind = CrossCube()
) -> List[CorpusPair]:
    """Every nontrivial search hit at sizes 1..n_max over F_p, in order."""
    pairs: List[CorpusPair] = []
    for n in range(1, n_max + 1):
        for ordinal, (a, b) in enumerate(cached_hits(p, n, relation, True)):
            pairs.append(
                CorpusPair(
                    a,
                    b,
                    relation,
                    describe_family(ExhaustiveHit(p, n, ordinal)),
                )
            )
    return pairs
