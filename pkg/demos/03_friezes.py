"""Friezes on tubes and on a window of ZA_infinity.

Seeds on the bottom row propagate upward through the mesh relation
x(i,n) x(i+1,n) = x(i,n+1) x(i+1,n-1) + 1.  Symbolic seeds give Chebyshev
polynomials; rational seeds give numbers.

Run:  python demos/03_friezes.py
"""

from fractions import Fraction

from gencheb.exactalg import to_str
from gencheb.meshquiver import (
    Tube,
    ZAInftyWindow,
    frieze_labels,
    mesh_presentation,
    x_seeds,
)


def show(labels, rows):
    for n in range(rows, 0, -1):
        row = sorted((i, v) for (i, k), v in labels.items() if k == n)
        print(f"  row {n}: " + "   ".join(str(v) if isinstance(v, Fraction) else to_str(v) for _, v in row))


def main():
    shape = Tube(3, 3)
    print("tube of rank 3, symbolic seeds x0, x1, x2")
    show(frieze_labels(shape, x_seeds(shape)), 3)

    print("\nsame tube with seeds 2, 1/2, 3")
    show(frieze_labels(shape, {0: Fraction(2), 1: Fraction(1, 2), 2: Fraction(3)}), 3)

    window = ZAInftyWindow(0, 4, 3)
    print("\nZA_infinity window, columns 0..4")
    show(frieze_labels(window, x_seeds(window)), 3)

    pres = mesh_presentation(Tube(2, 2))
    print("\nmesh presentation of the rank-2 tube truncated at row 2")
    for v, (lhs, rhs) in zip(pres.relation_vertices, pres.relations):
        print(f"  at {v}: {to_str(lhs)} = {to_str(rhs)}")


if __name__ == "__main__":
    main()
