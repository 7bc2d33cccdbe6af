"""Friezes on the Moebius band.

A row-1 sequence is grown from r starting values so that every window of r+1
consecutive entries satisfies P_{r+1} = 1.  The resulting frieze is periodic
with period r+3 and glued by a glide reflection.  The demo shows that the glide
with offset +1 holds on random data and the offset -1 variant does not.

Run:  python demos/04_moebius_band.py
"""

from fractions import Fraction

from gencheb.chebyshev import cheb_at
from gencheb.meshquiver import (
    PRINTED_GLIDE_OFFSET,
    glide_holds,
    moebius_numeric_check,
    moebius_period,
    moebius_sequence,
    strip_rows,
)


def main():
    r = 3
    seq = moebius_sequence(r, [Fraction(2), Fraction(-1, 3), Fraction(5)], 14)
    print(f"r={r}, period {moebius_period(r)}")
    print("  row 1:", [str(v) for v in seq])
    print("  windows of length r+1 all give 1:",
          all(cheb_at(seq[k:k + r + 1]) == 1 for k in range(len(seq) - r)))

    rows = strip_rows(seq, r + 2)
    print("  glide offset +1 holds:", glide_holds(r, rows, 1))
    print(f"  glide offset {PRINTED_GLIDE_OFFSET} holds:", glide_holds(r, rows, PRINTED_GLIDE_OFFSET))

    print("\nrandom rational trials")
    for r in range(1, 7):
        rep = moebius_numeric_check(r, 100, seed=0)
        print(f"  r={r}: passed {rep.passed}/100, resampled {rep.degenerate}, "
              f"inconsistent {rep.inconsistent}")


if __name__ == "__main__":
    main()
