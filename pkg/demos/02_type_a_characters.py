"""Cluster characters of the equioriented type-A quiver 0 <- 1 <- ... <- r-1.

The characters of interval modules S_i^(n) are Chebyshev polynomials evaluated
at the characters of the simples, and substituting the simples into P_{r+1}
gives exactly 1.

Run:  python demos/02_type_a_characters.py [r]
"""

import sys

from gencheb.exactalg import eval_rational, to_str, u
from gencheb.typea import (
    TypeAModule,
    character_table,
    chebyshev_in_simples,
    dim_vector,
    numerators_are_01,
    submodule_dims,
    verify_presentation_relation,
)


def main(r: int = 3):
    print(f"type A_{r}: {r * (r + 1) // 2} interval modules")
    ones = {u(k): 1 for k in range(r)}
    for m, x in character_table(r).items():
        print(f"  {m.key:8} dim={dim_vector(m)}  X = {to_str(x)}")
        print(f"           value at u=1: {eval_rational(x, ones)}")

    m = TypeAModule(r, 0, r)
    print(f"\nsubmodule dimension vectors of {m.key}:", submodule_dims(m))

    print("\nX of an interval module equals P_n in the simple characters:")
    for n in range(1, r + 1):
        same = chebyshev_in_simples(r, 0, n) == character_table(r)[TypeAModule(r, 0, n)]
        print(f"  S(0,{n}): {same}")

    print(f"\nP_{r + 1}(X_S0, ..., X_S{r - 1}, u{r - 1}) == 1:", verify_presentation_relation(r))
    print("numerators have coefficients in {0,1}:", numerators_are_01(r))


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 3)
