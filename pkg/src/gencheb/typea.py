"""Caldero-Chapoton characters for the equioriented quiver ``0 <- 1 <- ... <- r-1``.

Every indecomposable is an interval module ``S_i^(n)`` supported on
``[i, i + n - 1]``.  Such a module is uniserial, so its submodules are the
bottom intervals ``S_i^(k)`` and every quiver grassmannian is a point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .chebyshev import cheb_recurrence
from .errors import DimensionMismatch
from .exactalg import ONE, LaurentPoly, VarId, substitute, t, u


@dataclass(frozen=True)
class QuiverA:
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be >= 1")

    @property
    def arrows(self) -> tuple[tuple[int, int], ...]:
        """``(source, target)`` pairs, ``i + 1 -> i``."""
        return tuple((i + 1, i) for i in range(self.r - 1))


@dataclass(frozen=True, order=True)
class TypeAModule:
    """``S_i^(n)`` over ``Q_r``; ``n == 0`` is the zero module."""

    r: int
    i: int
    n: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be >= 1")
        if not 0 <= self.i <= self.r - 1:
            raise ValueError(f"socle {self.i} outside [0, {self.r - 1}]")
        if not 0 <= self.n <= self.r - self.i:
            raise ValueError(f"length {self.n} outside [0, {self.r - self.i}]")

    @property
    def key(self) -> str:
        return f"S({self.i},{self.n})"


def dim_vector(m: TypeAModule) -> tuple[int, ...]:
    return tuple(1 if m.i <= k < m.i + m.n else 0 for k in range(m.r))


def euler_form(d, e, quiver: QuiverA | None = None) -> int:
    """``sum_i d_i e_i - sum_{a: s -> t} d_s e_t``."""
    if len(d) != len(e):
        raise DimensionMismatch(f"lengths {len(d)} and {len(e)} differ")
    quiver = quiver or QuiverA(len(d))
    if quiver.r != len(d):
        raise DimensionMismatch("dimension vectors do not match the quiver")
    return sum(a * b for a, b in zip(d, e)) - sum(d[s] * e[tt] for s, tt in quiver.arrows)


def submodule_dims(m: TypeAModule) -> list[tuple[int, ...]]:
    """Dimension vectors of the submodules, bottom intervals of length 0..n."""
    return [dim_vector(TypeAModule(m.r, m.i, k)) for k in range(m.n + 1)]


def brute_force_submodule_dims(m: TypeAModule) -> list[tuple[int, ...]]:
    """Enumerate 0/1 patterns under ``dim M`` that are closed under the arrows.

    All structure maps of an interval module are isomorphisms ``k -> k``, so a
    subrepresentation is exactly a pattern whose support is closed under
    following arrows inside the support of ``M``.
    """
    d = dim_vector(m)
    support = [k for k in range(m.r) if d[k]]
    out = []
    for bits in itertools.product((0, 1), repeat=len(support)):
        e = [0] * m.r
        for k, b in zip(support, bits):
            e[k] = b
        closed = all(
            not e[s] or not d[tt] or e[tt] for s, tt in QuiverA(m.r).arrows
        )
        if closed:
            out.append(tuple(e))
    return sorted(out, key=sum)


def _u(i: int) -> LaurentPoly:
    return LaurentPoly.var(u(i))


@lru_cache(maxsize=None)
def cc_character(m: TypeAModule) -> LaurentPoly:
    """``X_M = sum_e prod_i u_i^(-<e, a_i> - <a_i, dim M - e>)`` with every Euler characteristic 1."""
    q = QuiverA(m.r)
    d = dim_vector(m)
    basis = [tuple(1 if k == j else 0 for k in range(m.r)) for j in range(m.r)]
    acc = LaurentPoly.constant(0)
    for e in submodule_dims(m):
        rest = tuple(a - b for a, b in zip(d, e))
        exps = {
            u(j): -euler_form(e, basis[j], q) - euler_form(basis[j], rest, q)
            for j in range(m.r)
        }
        acc = acc + LaurentPoly.monomial(1, exps)
    return acc


def shifted_projective_character(r: int, i: int) -> LaurentPoly:
    """Character of ``P_i[1]``, the initial variable ``u_i``."""
    if not 0 <= i < r:
        raise ValueError("vertex out of range")
    return _u(i)


def uprime(r: int, i: int) -> LaurentPoly:
    """``(u_{i-1} + u_{i+1}) / u_i`` with ``u_{-1} = u_r = 1``."""
    if not 0 <= i < r:
        raise ValueError("vertex out of range")
    left = _u(i - 1) if i > 0 else ONE
    right = _u(i + 1) if i < r - 1 else ONE
    return (left + right) * LaurentPoly.var(u(i), -1)


def simple_characters(r: int) -> list[LaurentPoly]:
    return [cc_character(TypeAModule(r, i, 1)) for i in range(r)]


def chebyshev_in_simples(r: int, i: int, n: int) -> LaurentPoly:
    """``P_n(X_{S_i}, ..., X_{S_{i+n-1}})``."""
    xs = simple_characters(r)
    return substitute(cheb_recurrence(n), {t(k): xs[i + k] for k in range(n)})


def verify_chebyshev_character(r: int, i: int, n: int) -> bool:
    m = TypeAModule(r, i, n)
    if n < 1:
        raise ValueError("n must be >= 1")
    return chebyshev_in_simples(r, i, n) == cc_character(m)


def presentation_image(r: int) -> dict[VarId, LaurentPoly]:
    """``t_i -> X_{S_i}`` for ``i < r`` and ``t_r -> u_{r-1}``."""
    sigma = {t(k): x for k, x in enumerate(simple_characters(r))}
    sigma[t(r)] = _u(r - 1)
    return sigma


def verify_presentation_relation(r: int) -> bool:
    """``P_{r+1}(X_{S_0}, ..., X_{S_{r-1}}, u_{r-1}) == 1``."""
    return substitute(cheb_recurrence(r + 1), presentation_image(r)) == 1


def y_sequence(r: int) -> dict[int, LaurentPoly]:
    """Elements ``y_{-1} .. y_r`` of ``Z[t_0..t_r]`` for the inverse map.

    Runs ``y_{i-1} = t_i y_i - y_{i+1}`` downward from ``y_r = 1`` and
    ``y_{r-1} = t_r``; ``y_{-1}`` then equals ``P_{r+1}(t_0, ..., t_r)``,
    which is 1 in the quotient.
    """
    ys = {r: ONE, r - 1: LaurentPoly.var(t(r))}
    for i in range(r - 1, -1, -1):
        ys[i - 1] = LaurentPoly.var(t(i)) * ys[i] - ys[i + 1]
    return ys


def presentation_roundtrip(r: int) -> bool:
    """Check both directions of the type-A presentation symbolically.

    * ``y_{-1} == P_{r+1}(t_0..t_r)`` in ``Z[t]``;
    * under ``t_i -> X_{S_i}``, ``t_r -> u_{r-1}``: ``y_i -> u_i`` for
      ``0 <= i < r`` and ``y_{-1} -> 1``;
    * ``u_{i+1} == u_i u_i' - u_{i-1}`` with ``u_{-1} = u_r = 1``.
    """
    ys = y_sequence(r)
    if ys[-1] != cheb_recurrence(r + 1):
        return False
    sigma = presentation_image(r)
    images = {i: substitute(y, sigma) for i, y in ys.items()}
    if images[-1] != 1 or images[r] != 1:
        return False
    if any(images[i] != _u(i) for i in range(r)):
        return False
    us = {-1: ONE, r: ONE, **{i: _u(i) for i in range(r)}}
    return all(us[i + 1] == us[i] * uprime(r, i) - us[i - 1] for i in range(r))


def modules(r: int) -> list[TypeAModule]:
    return [TypeAModule(r, i, n) for i in range(r) for n in range(1, r - i + 1)]


def character_table(r: int) -> dict[TypeAModule, LaurentPoly]:
    return {m: cc_character(m) for m in modules(r)}


def cluster_variables(r: int) -> list[LaurentPoly]:
    """Module characters followed by the initial variables ``u_0 .. u_{r-1}``."""
    return list(character_table(r).values()) + [_u(i) for i in range(r)]


def numerators_are_01(r: int) -> bool:
    """Whether every character has only coefficients equal to 1."""
    return all(c == 1 for x in character_table(r).values() for c in x.coefficients())
