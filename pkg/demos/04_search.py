"""Exhaustive search over small prime fields: complete and deterministic.

Enumerates every pair of n x n matrices over F_p (optionally with entries
restricted to a subset), keeps the ones satisfying a relation, and
returns them in a canonical order that does not depend on how many
processes did the scanning.

Run:  python3 demos/04_search.py
"""

import time

from drazinkit import (
    CrossCube,
    LambdaCommute,
    PrimeField,
    SearchSpec,
    exhaustive_search,
)


def flat(m):
    return [[str(m.entry(i, j)) for j in range(m.cols)] for i in range(m.rows)]


def main():
    # 1x1 warmup over F_3: a**3 == a holds for every residue, so the cross
    # relation is automatic and only nontriviality (a*b != 0) filters.
    spec1 = SearchSpec(3, 1, CrossCube(), require_nontrivial=True)
    hits1 = exhaustive_search(spec1)
    print("p=3, n=1 nontrivial hits:", [
        (str(a.entry(0, 0)), str(b.entry(0, 0))) for a, b in hits1
    ])

    # The full 2x2 space over F_3: 3^8 = 6561 candidate pairs per side.
    spec2 = SearchSpec(3, 2, CrossCube(), require_nontrivial=True)
    t0 = time.perf_counter()
    serial = exhaustive_search(spec2, jobs=1)
    t1 = time.perf_counter()
    parallel = exhaustive_search(spec2, jobs=8)
    t2 = time.perf_counter()
    print(f"p=3, n=2: {len(serial)} nontrivial hits "
          f"(serial {t1 - t0:.2f}s, 8 jobs {t2 - t1:.2f}s)")
    print("job count changes nothing:", serial == parallel)

    noncommuting = [(a, b) for a, b in serial if a * b != b * a]
    print("of which genuinely noncommuting:", len(noncommuting))
    a, b = noncommuting[0]
    print("first noncommuting hit: a =", flat(a), " b =", flat(b))

    # Entry bounds shrink the space: 2x2 over F_5 with entries in {0, 1}.
    spec_bounded = SearchSpec(
        5, 2, CrossCube(), entry_bound=(0, 1), require_nontrivial=True
    )
    bounded = exhaustive_search(spec_bounded)
    print(f"p=5, n=2 with entries in {{0,1}}: {len(bounded)} nontrivial hits")

    # Lambda relations search too: a*b == 2*(b*a) over F_5, 2x2.
    f5 = PrimeField(5)
    spec_lam = SearchSpec(
        5, 2, LambdaCommute(f5.scalar(2)), entry_bound=(0, 1, 2),
        require_nontrivial=True,
    )
    lam_hits = exhaustive_search(spec_lam, jobs=4)
    print(f"p=5, n=2, a*b == 2*b*a, entries in {{0,1,2}}: {len(lam_hits)} hits")

    # Budgets protect against runaway spaces: 3x3 over F_5 is 5^18 pairs.
    try:
        exhaustive_search(SearchSpec(5, 3, CrossCube()))
    except Exception as exc:
        print("oversized space refused:", exc)


if __name__ == "__main__":
    main()
