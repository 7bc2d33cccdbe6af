"""Multiplying characters in a tube and in ZA_infinity.

A non-split extension between two regular modules splits the product of their
characters into the characters of the middle term plus a correction.  The
rank-4 example needs the shifts on both sides of the extension.

Run:  python demos/05_multiplication.py
"""

from gencheb.exactalg import to_str
from gencheb.meshquiver import ModuleCoord, tube_label
from gencheb.multiplication import (
    TubeProductInstance,
    ext_dim_tube,
    hall_expansion,
    hall_sum_polys,
    summed_identity,
    tube_identity,
    wild_identity,
)


def name(c):
    return f"R_{c.i}^({c.n})"


def main():
    inst = TubeProductInstance(2, 2, 2, 1, 0)
    res = tube_identity(inst)
    e, b = res.decomposition.E, res.decomposition.B
    print(f"rank 2, n=m=2, j=1: X_{name(ModuleCoord(1, 2))} X_{name(ModuleCoord(0, 2))}")
    print(f"  = X_{name(e[0])} X_{name(e[1])} + X_{name(b[0])} X_{name(b[1])}")
    print(f"  lhs {to_str(res.lhs)}")
    print(f"  rhs {to_str(res.rhs)}   equal: {res.equal}")

    res = summed_identity(1, 3, 3, 0)
    print(f"\nhomogeneous tube, n=m=3: {res.dim} admissible shifts, summed identity holds: {res.equal}")
    print("  counting the boundary shift too:", ext_dim_tube(1, 3, 3, 0, inclusive=True))

    print("\nrank-4 example: 2 X_R0 X_R1^(3)")
    dim, terms = hall_expansion(4, ModuleCoord(0, 1), ModuleCoord(1, 3))
    for term in terms:
        print(f"  + X_{name(term.first)} X_{name(term.second)}")
    lhs = 2 * tube_label(4, 0, 1) * tube_label(4, 1, 3)
    print(f"  extension dimension {dim}, identity holds: {hall_sum_polys(4, terms) == lhs}")

    res = wild_identity(3, 2, 2)
    print(f"\nZA_infinity, n=3, m=2, j=2: {to_str(res.lhs)}")
    print(f"  = {to_str(res.rhs)}   equal: {res.equal}")


if __name__ == "__main__":
    main()
