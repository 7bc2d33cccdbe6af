"""Multiplication formulas for characters in tubes and in ZA-infinity components.

All characters are rendered in the cluster-mesh model: ``X_{R_i^(n)}`` is
``P_n(x_i, ..., x_{i+n-1})``, with indices mod ``p`` in a tube of rank ``p``
and in the free ring for a wild component.  Quasi-length 0 gives the
constant 1.

Products are normalized as ``M = R_0^(n)`` and ``N = R_j^(m)``; for a shift
``k`` write ``s = j + k p``.  The printed hypotheses ``0 < s < n`` and
``m > n - s`` are the default (``inclusive=False``).  With
``inclusive=True`` the first condition becomes ``0 < s <= n``, which is
exactly the range where ``Hom(M, tau N)`` is nonzero (see
:func:`hom_dim_tube`).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InadmissibleInstance, NoExtension
from .exactalg import ONE, LaurentPoly, eval_rational
from .meshquiver import ModuleCoord, tube_label, za_label


def _in_range(s: int, n: int, m: int, inclusive: bool) -> bool:
    upper = s <= n if inclusive else s < n
    return 0 < s and upper and m > n - s


def admissible_shifts(p: int, n: int, m: int, j: int, inclusive: bool = False) -> list[int]:
    """All ``k`` with ``s = j + k p`` satisfying the hypotheses."""
    if p < 1 or n < 1 or m < 1 or not 0 <= j < p:
        raise ValueError(f"bad tube instance p={p} n={n} m={m} j={j}")
    # 0 < j + kp <= n bounds k to a finite range
    ks = range(-((j - 1) // p) - 1, (n - j) // p + 1)
    return [k for k in ks if _in_range(j + k * p, n, m, inclusive)]


def ext_dim_tube(p: int, n: int, m: int, j: int, inclusive: bool = False) -> int:
    """Number of admissible shifts for ``N = R_j^(m)`` against ``M = R_0^(n)``."""
    return len(admissible_shifts(p, n, m, j, inclusive))


def hom_dim_tube(p: int, a: int, n: int, b: int, m: int) -> int:
    """``dim Hom(R_a^(n), R_b^(m))`` in a standard tube of rank ``p``.

    A nonzero map factors through a common uniserial image of length
    ``l``: a quotient ``R_{a+n-l}^(l)`` of the source that is also the
    submodule ``R_b^(l)`` of the target.
    """
    return sum(1 for length in range(1, min(n, m) + 1) if (a + n - length - b) % p == 0)


@dataclass(frozen=True)
class TubeProductInstance:
    p: int
    n: int
    m: int
    j: int
    k: int

    @property
    def shift(self) -> int:
        return self.j + self.k * self.p

    def admissible(self, inclusive: bool = False) -> bool:
        if self.p < 1 or self.n < 1 or self.m < 1 or not 0 <= self.j < self.p:
            return False
        return _in_range(self.shift, self.n, self.m, inclusive)

    @property
    def key(self) -> str:
        return f"p={self.p},n={self.n},m={self.m},j={self.j},k={self.k}"


@dataclass(frozen=True)
class TriangleDecomposition:
    """Middle terms ``E`` and ``B`` of the two non-split triangles."""

    E: tuple[ModuleCoord, ModuleCoord]
    B: tuple[ModuleCoord, ModuleCoord]


def _coord(p: int | None, i: int, n: int) -> ModuleCoord:
    return ModuleCoord(i % p if p else i, n)


def triangle_terms(inst: TubeProductInstance, inclusive: bool = False) -> TriangleDecomposition:
    """``E = R_0^(s+m) + R_s^(n-s)`` and ``B = R_0^(s-1) + R_{n+1}^(m+s-n-1)``."""
    if not inst.admissible(inclusive):
        raise InadmissibleInstance(inst.key)
    p, n, m, s = inst.p, inst.n, inst.m, inst.shift
    return TriangleDecomposition(
        E=(_coord(p, 0, s + m), _coord(p, s, n - s)),
        B=(_coord(p, 0, s - 1), _coord(p, n + 1, m + s - n - 1)),
    )


def _label(p: int | None, c: ModuleCoord) -> LaurentPoly:
    if c.n == 0:
        return ONE
    return tube_label(p, c.i, c.n) if p else za_label(c.i, c.n)


def _rhs(p: int | None, dec: TriangleDecomposition) -> LaurentPoly:
    (e1, e2), (b1, b2) = dec.E, dec.B
    return _label(p, e1) * _label(p, e2) + _label(p, b1) * _label(p, b2)


@dataclass(frozen=True)
class IdentityResult:
    lhs: LaurentPoly
    rhs: LaurentPoly
    equal: bool
    decomposition: TriangleDecomposition | None = None
    dim: int | None = None


def tube_identity(inst: TubeProductInstance, inclusive: bool = False) -> IdentityResult:
    """``X_{R_j^(m)} X_{R_0^(n)} = X_E + X_B`` in ``Z[x_0 .. x_{p-1}]``."""
    dec = triangle_terms(inst, inclusive)
    lhs = tube_label(inst.p, inst.j, inst.m) * tube_label(inst.p, 0, inst.n)
    rhs = _rhs(inst.p, dec)
    return IdentityResult(lhs, rhs, lhs == rhs, dec)


def wild_identity(n: int, m: int, j: int) -> IdentityResult:
    """Same formula in the free ring ``Z[x_0 .. x_{n+m}]`` (component ZA-infinity)."""
    if not (0 < j < n and m > n - j and m > 0):
        raise InadmissibleInstance(f"n={n},m={m},j={j}")
    dec = TriangleDecomposition(
        E=(ModuleCoord(0, m + j), ModuleCoord(j, n - j)),
        B=(ModuleCoord(0, j - 1), ModuleCoord(n + 1, m + j - n - 1)),
    )
    lhs = za_label(j, m) * za_label(0, n)
    rhs = _rhs(None, dec)
    top = max((v.index for v in lhs.vars + rhs.vars), default=0)
    if top > n + m:
        raise AssertionError(f"variable x{top} outside x0..x{n + m}")
    return IdentityResult(lhs, rhs, lhs == rhs, dec)


def summed_identity(p: int, n: int, m: int, j: int, inclusive: bool = False) -> IdentityResult:
    """``dim * X_M X_N = sum over admissible shifts of (X_E + X_B)``."""
    ks = admissible_shifts(p, n, m, j, inclusive)
    if not ks:
        raise NoExtension(f"p={p},n={n},m={m},j={j}")
    dim = len(ks)
    lhs = dim * (tube_label(p, j, m) * tube_label(p, 0, n))
    rhs = LaurentPoly.constant(0)
    for k in ks:
        rhs = rhs + _rhs(p, triangle_terms(TubeProductInstance(p, n, m, j, k), inclusive))
    return IdentityResult(lhs, rhs, lhs == rhs, dim=dim)


@dataclass(frozen=True)
class HallTerm:
    """One summand ``X_{first} X_{second}`` of a product expansion."""

    first: ModuleCoord
    second: ModuleCoord


def hall_expansion(p: int, a: ModuleCoord, b: ModuleCoord, inclusive: bool = True):
    """Expand ``X_a X_b`` over both orderings of the pair in a rank-``p`` tube.

    Each ordering is shifted so the submodule side has socle 0, expanded with
    the middle terms of its admissible shifts, and shifted back.  Returns
    ``(dim, terms)`` where ``dim`` counts admissible shifts over both
    orderings, so that ``dim * X_a X_b`` equals the sum of the terms.
    """
    terms: list[HallTerm] = []
    dim = 0
    for sub, quo in ((a, b), (b, a)):
        off = sub.i
        j = (quo.i - off) % p
        for k in admissible_shifts(p, sub.n, quo.n, j, inclusive):
            dec = triangle_terms(TubeProductInstance(p, sub.n, quo.n, j, k), inclusive)
            dim += 1
            for c1, c2 in (dec.E, dec.B):
                terms.append(HallTerm(_coord(p, c1.i + off, c1.n), _coord(p, c2.i + off, c2.n)))
    return dim, terms


def hall_sum_polys(p: int, terms: list[HallTerm]) -> LaurentPoly:
    acc = LaurentPoly.constant(0)
    for tm in terms:
        acc = acc + _label(p, tm.first) * _label(p, tm.second)
    return acc


def prescreen(p: int | None, first: tuple[ModuleCoord, ModuleCoord], dec: TriangleDecomposition,
              points: list[dict]) -> bool:
    """Randomized check of ``X_a X_b = X_E + X_B`` at rational points.

    Each factor label is evaluated on its own with ``eval_rational`` and the
    numbers are combined, so no expanded product is ever formed.
    """
    for pt in points:
        def val(c: ModuleCoord):
            return eval_rational(_label(p, c), pt)

        (a, b), (e1, e2), (b1, b2) = first, dec.E, dec.B
        if val(a) * val(b) != val(e1) * val(e2) + val(b1) * val(b2):
            return False
    return True


# -- sweeps ----------------------------------------------------------------


def tube_instances(p: int, max_len: int, inclusive: bool = False) -> list[TubeProductInstance]:
    out = []
    for n in range(1, max_len + 1):
        for m in range(1, max_len + 1):
            for j in range(p):
                for k in admissible_shifts(p, n, m, j, inclusive):
                    out.append(TubeProductInstance(p, n, m, j, k))
    return out


def wild_instances(max_len: int) -> list[tuple[int, int, int]]:
    return [
        (n, m, j)
        for n in range(2, max_len + 1)
        for j in range(1, n)
        for m in range(n - j + 1, max_len + 1)
    ]
