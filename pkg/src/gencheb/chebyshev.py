"""Generalized Chebyshev polynomials of infinite and finite rank.

``P_n(t0, ..., t_{n-1})`` is built three ways: the three-term recurrence
``P_n = t_{n-1} P_{n-1} - P_{n-2}``, a cofactor expansion of the tridiagonal
matrix with diagonal ``t_{n-1}, ..., t_0``, and the cluster-mesh quotient
``P_{n+1} = (P_n(t0..) P_n(t1..) - 1) / P_{n-1}(t1..)``.  Rank ``p`` versions
fold the variable index mod ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactalg import ONE, ZERO, LaurentPoly, VarId, parse_poly, poly_div_exact, rename, t, to_str

__all__ = [
    "ChebSpec",
    "cheb_recurrence",
    "cheb_determinant",
    "cheb_clustermesh",
    "cheb_rank",
    "cheb_rank_direct",
    "cheb_rank_clustermesh",
    "classical_S",
    "shift",
    "cheb_at",
    "table",
    "errata",
    "PRINTED_TABLES",
]


@lru_cache(maxsize=None)
def cheb_recurrence(n: int) -> LaurentPoly:
    """Three-term recurrence with ``P_{-1} = 0`` and ``P_0 = 1``."""
    if n < 0:
        if n == -1:
            return ZERO
        raise ValueError("n must be >= 0")
    prev, cur = ZERO, ONE
    for k in range(1, n + 1):
        prev, cur = cur, LaurentPoly.var(t(k - 1)) * cur - prev
    return cur


def cheb_determinant(n: int) -> LaurentPoly:
    """Cofactor expansion along the first row of the tridiagonal matrix.

    Row ``r`` has ``t_{n-1-r}`` on the diagonal and ones beside it.
    """
    if n < 1:
        raise ValueError("n must be >= 1")

    def entry(r: int, c: int):
        if r == c:
            return LaurentPoly.var(t(n - 1 - r))
        if abs(r - c) == 1:
            return ONE
        return None

    memo: dict[tuple[int, tuple[int, ...]], LaurentPoly] = {}

    def minor(r: int, cols: tuple[int, ...]) -> LaurentPoly:
        if not cols:
            return ONE
        key = (r, cols)
        if key in memo:
            return memo[key]
        acc = ZERO
        for pos, c in enumerate(cols):
            a = entry(r, c)
            if a is None:
                continue
            sub = minor(r + 1, cols[:pos] + cols[pos + 1:])
            if sub.is_zero():
                continue
            term = a * sub
            acc = acc - term if pos % 2 else acc + term
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))


def shift(p: LaurentPoly, s: int, family: str = "t", modulus: int | None = None) -> LaurentPoly:
    """Send ``t_j`` to ``family_{j+s}`` (index taken mod ``modulus`` if given)."""
    mapping = {}
    for v in p.vars:
        if v.family != "t":
            continue
        idx = v.index + s
        if modulus is not None:
            idx %= modulus
        mapping[v] = VarId(family, idx)
    return rename(p, mapping)


def cheb_clustermesh(n: int) -> LaurentPoly:
    """Bottom-up cluster-mesh quotients; every division must be exact."""
    if n < 0:
        raise ValueError("n must be >= 0")
    polys = [ONE, LaurentPoly.var(t(0))]
    for k in range(1, n):
        num = polys[k] * shift(polys[k], 1) - 1
        polys.append(poly_div_exact(num, shift(polys[k - 1], 1)))
    return polys[n]


def cheb_rank(n: int, p: int) -> LaurentPoly:
    """Recurrence polynomial with ``t_j`` folded to ``t_{j mod p}``."""
    if p < 1:
        raise ValueError("rank must be >= 1")
    return shift(cheb_recurrence(n), 0, modulus=p)


def cheb_rank_direct(n: int, p: int) -> LaurentPoly:
    """Recurrence run directly in ``t_0 .. t_{p-1}``."""
    if p < 1:
        raise ValueError("rank must be >= 1")
    prev, cur = ZERO, ONE
    for k in range(1, n + 1):
        prev, cur = cur, LaurentPoly.var(t((k - 1) % p)) * cur - prev
    return cur


def cheb_rank_clustermesh(n: int, p: int) -> LaurentPoly:
    """Cluster-mesh quotients computed inside ``Z[t_0..t_{p-1}]``.

    Row ``k`` holds ``P_k(t_s, ..., t_{s+k-1})`` folded mod ``p`` for each
    residue ``s``.
    """
    if p < 1:
        raise ValueError("rank must be >= 1")
    rows = [[ONE] * p, [LaurentPoly.var(t(s)) for s in range(p)]]
    for k in range(1, n):
        cur, below = rows[k], rows[k - 1]
        rows.append([
            poly_div_exact(cur[s] * cur[(s + 1) % p] - 1, below[(s + 1) % p])
            for s in range(p)
        ])
    return rows[n][0]


def classical_S(n: int) -> LaurentPoly:
    """Normalized Chebyshev polynomial of the second kind in ``t0``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    x0 = LaurentPoly.var(t(0))
    prev, cur = ZERO, ONE
    for _ in range(n):
        prev, cur = cur, x0 * cur - prev
    return cur


def cheb_at(values) -> object:
    """Evaluate ``P_n`` at a sequence of ring elements via the recurrence.

    Works for ints, Fractions and LaurentPolys alike; ``n = len(values)``.
    """
    prev, cur = 0, 1
    for v in values:
        prev, cur = cur, v * cur - prev
    return cur


@dataclass(frozen=True)
class ChebSpec:
    """Index ``n`` plus rank; ``rank=None`` means infinite rank."""

    n: int
    rank: int | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.rank is not None and self.rank < 1:
            raise ValueError("finite rank must be >= 1")

    def build(self) -> LaurentPoly:
        if self.rank is None:
            return cheb_recurrence(self.n)
        return cheb_rank(self.n, self.rank)


# Reference tables exactly as originally typeset, keyed by rank (None for
# infinite rank) and then by n.  One rank-1 entry lost a sign when typeset.
PRINTED_TABLES: dict[int | None, dict[int, str]] = {
    None: {
        1: "t_0",
        2: "t_0t_1-1",
        3: "t_0 t_1 t_2 - t_0 - t_2",
        4: "t_0 t_1 t_2 t_3 - t_0 t_1 - t_2 t_3 - t_0 t_3 + 1",
        5: "t_0 t_1 t_2 t_3 t_4 - t_0 t_1 t_2 - t_0 t_1 t_4 - t_2 t_3 t_4 + t_2 - t_0 t_3 t_4 + t_0 + t_4",
    },
    1: {
        1: "t_0",
        2: "t_0^2-1",
        3: "t_0^3 - 2t_0",
        4: "t_0^4- 3t_0^2+ 1",
        5: "t_0^5- 4t_0^33t_0",
    },
    2: {
        1: "t_0",
        2: "t_0 t_1 - 1",
        3: "t_0^2 t_1 - 2t_0",
        4: "t_0^2  t_1^2  - 3 t_0 t_1 + 1",
        5: "t_0^3  t_1^2  - 4 t_0^2 t_1 + 3t_0",
    },
    3: {
        1: "t_0",
        2: "t_0 t_1 - 1",
        3: "t_0 t_1 t_2 - t_0 - t_2",
        4: "t_2 t_0^2  t_1 - t_0 t_1 - t_2 t_0 - t_0^2  + 1",
        5: "t_0^2  t_1^2  t_2 - t_0^2  t_1 - t_0 t_1^2  - 2 t_0 t_1 t_2 + t_0 + t_1 + t_2",
    },
    4: {
        1: "t_0",
        2: "t_0t_1-1",
        3: "t_0 t_1 t_2 - t_0 - t_2",
        4: "t_0 t_1 t_2 t_3 - t_0 t_1 - t_2 t_3 - t_0 t_3 + 1",
        5: "t_0^2 t_1 t_2 t_3 - t_0 t_1 t_2 - t_0^2 t_1 - t_0t_2 t_3  + t_2 - t_0^2 t_3 + 2t_0",
    },
}


def table(rank: int | None, max_n: int, min_n: int = 0) -> dict[int, LaurentPoly]:
    """``{n: P_n}`` (infinite rank) or ``{n: P_{n,rank}}`` for ``min_n <= n <= max_n``."""
    return {n: ChebSpec(n, rank).build() for n in range(min_n, max_n + 1)}


def _rank_label(rank: int | None) -> str:
    return "inf" if rank is None else str(rank)


def errata(ranks=None) -> list[dict]:
    """Cells of the printed tables that disagree with the recurrence.

    Each record carries the printed string, how it parses (or ``None`` if it
    does not parse) and the recomputed canonical form.
    """
    out = []
    keys = list(PRINTED_TABLES) if ranks is None else list(ranks)
    for rank in sorted(keys, key=lambda r: (r is None, r or 0)):
        for n, printed in sorted(PRINTED_TABLES[rank].items()):
            expected = ChebSpec(n, rank).build()
            try:
                parsed = parse_poly(printed)
            except ValueError:
                parsed = None
            if parsed != expected:
                out.append({
                    "rank": _rank_label(rank),
                    "n": n,
                    "printed": printed,
                    "parsed": None if parsed is None else to_str(parsed),
                    "recomputed": to_str(expected),
                })
    return out
