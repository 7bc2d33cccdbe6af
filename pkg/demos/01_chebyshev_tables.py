"""Generalized Chebyshev polynomials: the recurrence, its rank-p folding, and
the three construction routes side by side.

Run:  python demos/01_chebyshev_tables.py
"""

from gencheb.chebyshev import (
    cheb_at,
    cheb_clustermesh,
    cheb_determinant,
    cheb_recurrence,
    errata,
    table,
)
from gencheb.exactalg import to_str


def main():
    print("P_n in infinitely many variables t0, t1, ...")
    for n, poly in table(None, 5, min_n=1).items():
        print(f"  P_{n} = {to_str(poly)}")

    # folding indices mod p collapses the variable set
    for p in (1, 2, 3):
        print(f"\nrank {p}: indices read mod {p}")
        for n, poly in table(p, 5, min_n=1).items():
            print(f"  P_{n},{p} = {to_str(poly)}")

    print("\nthe determinant and the cluster-mesh division give the same P_n:")
    for n in range(1, 9):
        rec = cheb_recurrence(n)
        same = cheb_determinant(n) == rec == cheb_clustermesh(n)
        print(f"  n={n}: {len(rec.terms())} terms, routes agree: {same}")

    print("\nspecial values")
    print("  P_n(1,...,1) for n = 0..11:", [cheb_at([1] * n) for n in range(12)])
    print("  P_n(2,...,2) for n = 0..11:", [cheb_at([2] * n) for n in range(12)])

    print("\nreference table cells that disagree with the recurrence:")
    for e in errata():
        print(f"  rank {e['rank']}, n={e['n']}: printed {e['printed']!r}")
        print(f"    recomputed {e['recomputed']}")


if __name__ == "__main__":
    main()
