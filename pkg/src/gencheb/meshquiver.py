"""Stable translation quivers, cluster-mesh friezes and mesh presentations.

Vertices are ``(i, n)`` pairs: ``i`` the quasi-socle index, ``n >= 1`` the
quasi-length.  Arrows follow the repetition quiver of A-infinity::

    (i, n) -> (i, n + 1)        (i, n) -> (i + 1, n - 1)

and the translation is ``tau(i, n) = (i - 1, n)``.  With these conventions
the mesh ending at ``(i + 1, n)`` reads
``x[i, n] * x[i + 1, n] = x[i, n + 1] * x[i + 1, n - 1] + 1``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Callable, Mapping, Union

from .chebyshev import cheb_at, cheb_recurrence, shift
from .errors import DegenerateSample, InconsistentFrieze, InvalidShape, MissingSeed, NotDivisible
from .exactalg import ONE, LaurentPoly, VarId, eval_rational, poly_div_exact, t

Vertex = tuple[int, int]
Label = Union[LaurentPoly, Fraction]


@dataclass(frozen=True)
class ModuleCoord:
    """Quasi-socle ``i`` and quasi-length ``n``; ``n == 0`` is the zero object."""

    i: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("quasi-length must be >= 0")


# -- shapes ----------------------------------------------------------------


@dataclass(frozen=True)
class ZAInftyWindow:
    i_min: int
    i_max: int
    n_max: int


@dataclass(frozen=True)
class Tube:
    p: int
    n_max: int


@dataclass(frozen=True)
class Moebius:
    """Glide quotient of the width-``r`` strip of ZA-infinity.

    ``glide_offset`` fixes the gluing ``(i, n) ~ (i + n + glide_offset, r + 1 - n)``;
    ``1`` is the value consistent with the labeling used here.
    """

    r: int
    glide_offset: int = 1


Shape = Union[ZAInftyWindow, Tube, Moebius]


def _validate(shape: Shape):
    if isinstance(shape, ZAInftyWindow):
        if shape.n_max < 1 or shape.i_max < shape.i_min:
            raise InvalidShape(f"bad window {shape}")
    elif isinstance(shape, Tube):
        if shape.p < 1 or shape.n_max < 1:
            raise InvalidShape(f"bad tube {shape}")
    elif isinstance(shape, Moebius):
        if shape.r < 1:
            raise InvalidShape(f"bad Moebius band {shape}")
    else:
        raise InvalidShape(f"unknown shape {shape!r}")


def moebius_period(r: int, glide_offset: int = 1) -> int:
    """Translation period of the glide squared."""
    return r + 1 + 2 * glide_offset


def canonical(shape: Shape, v: Vertex) -> Vertex:
    """Canonical representative of a vertex; idempotent."""
    i, n = v
    if isinstance(shape, Tube):
        return (i % shape.p, n)
    if isinstance(shape, Moebius):
        r, g = shape.r, shape.glide_offset
        period = moebius_period(r, g)
        a = (i % period, n)
        b = ((i + n + g) % period, r + 1 - n)
        return min(a, b, key=lambda w: (w[1], w[0]))
    return v


@dataclass(frozen=True)
class TranslationQuiver:
    shape: Shape
    vertices: tuple[Vertex, ...]
    arrows: tuple[tuple[Vertex, Vertex], ...]
    tau: Mapping[Vertex, Vertex] = field(hash=False)
    boundary: frozenset[Vertex]

    def incoming(self, v: Vertex) -> list[Vertex]:
        return sorted(s for s, d in self.arrows if d == v)

    def outgoing(self, v: Vertex) -> list[Vertex]:
        return sorted(d for s, d in self.arrows if s == v)


def _rows(shape: Shape) -> int:
    return shape.r if isinstance(shape, Moebius) else shape.n_max


def build_shape(shape: Shape) -> TranslationQuiver:
    _validate(shape)
    n_top = _rows(shape)
    if isinstance(shape, ZAInftyWindow):
        raw = [(i, n) for n in range(1, n_top + 1) for i in range(shape.i_min, shape.i_max + 1)]
    elif isinstance(shape, Tube):
        raw = [(i, n) for n in range(1, n_top + 1) for i in range(shape.p)]
    else:
        period = moebius_period(shape.r, shape.glide_offset)
        raw = [(i, n) for n in range(1, n_top + 1) for i in range(period)]
    verts = sorted({canonical(shape, v) for v in raw}, key=lambda w: (w[1], w[0]))
    vset = set(verts)

    def inside(w: Vertex) -> bool:
        return 1 <= w[1] <= n_top and canonical(shape, w) in vset

    arrows = []
    for i, n in raw:
        for w in ((i, n + 1), (i + 1, n - 1)):
            if inside(w):
                arrows.append((canonical(shape, (i, n)), canonical(shape, w)))
    if not isinstance(shape, ZAInftyWindow):
        # tube and band vertices were enumerated once per residue already
        arrows = sorted(set(arrows)) if isinstance(shape, Moebius) else sorted(arrows)
    else:
        arrows.sort()

    tau = {}
    boundary = set()
    for v in verts:
        i, n = v
        tv = (i - 1, n)
        if inside(tv):
            tau[v] = canonical(shape, tv)
        preds = [(i, n - 1), (i - 1, n + 1)]
        leaves = v not in tau or any(
            1 <= w[1] and not inside(w) and not (isinstance(shape, Moebius) and w[1] == shape.r + 1)
            for w in preds
        )
        if leaves:
            boundary.add(v)
    return TranslationQuiver(shape, tuple(verts), tuple(arrows), tau, frozenset(boundary))


def mesh_defects(q: TranslationQuiver) -> list[Vertex]:
    """Non-boundary vertices whose in-arrows do not match the out-arrows of tau(v)."""
    bad = []
    for v in q.vertices:
        if v in q.boundary:
            continue
        if q.incoming(v) != q.outgoing(q.tau[v]):
            bad.append(v)
    return bad


# -- friezes ---------------------------------------------------------------


def _divide(a: Label, b: Label) -> Label:
    if isinstance(a, LaurentPoly) or isinstance(b, LaurentPoly):
        return poly_div_exact(LaurentPoly._coerce(a), LaurentPoly._coerce(b))
    if b == 0:
        raise DegenerateSample("zero label below a mesh")
    return Fraction(a) / b


def _one_like(seed: Label) -> Label:
    return ONE if isinstance(seed, LaurentPoly) else Fraction(1)


def frieze_labels(shape: Shape, seeds: Mapping[int, Label]) -> dict[Vertex, Label]:
    """Propagate quasi-length-1 seeds upward through the cluster-mesh relation.

    ``seeds`` maps the socle index ``i`` of each row-1 vertex to its label.
    Row 0 is the constant 1.  On a ZA-infinity window only vertices whose
    whole seed range ``i .. i + n - 1`` lies in the window are returned.  On a
    Moebius band the strip is propagated one row past the top and checked
    against the glide identification and the all-ones boundary row.
    """
    _validate(shape)
    if isinstance(shape, Tube):
        period = shape.p
        idx = range(shape.p)
    elif isinstance(shape, Moebius):
        period = moebius_period(shape.r, shape.glide_offset)
        idx = range(period)
    else:
        period = None
        idx = range(shape.i_min, shape.i_max + 1)
    missing = [i for i in idx if i not in seeds]
    if missing:
        raise MissingSeed(f"no seed for row-1 vertices {missing}")
    n_top = shape.r + 1 if isinstance(shape, Moebius) else shape.n_max
    one = _one_like(seeds[idx[0]])

    rows: list[dict[int, Label]] = [{i: one for i in idx}, {i: seeds[i] for i in idx}]

    def at(row, i):
        return row.get(i % period if period else i)

    for n in range(1, n_top):
        cur, below = rows[n], rows[n - 1]
        nxt = {}
        for i in cur:
            a, b, c = at(cur, i), at(cur, i + 1), at(below, i + 1)
            if a is None or b is None or c is None:
                continue
            try:
                nxt[i] = _divide(a * b - 1, c)
            except NotDivisible as exc:
                raise NotDivisible(f"mesh at ({i}, {n + 1}) fails: {exc}") from None
        rows.append(nxt)

    labels = {}
    for n in range(1, len(rows)):
        for i, val in rows[n].items():
            if isinstance(shape, Moebius) and n > shape.r:
                continue
            labels[(i, n)] = val
    if isinstance(shape, Moebius):
        top = rows[shape.r + 1]
        if any(val != 1 for val in top.values()):
            raise InconsistentFrieze(f"row {shape.r + 1} is not identically 1")
        glued = {}
        for v, val in labels.items():
            c = canonical(shape, v)
            if c in glued and glued[c] != val:
                raise InconsistentFrieze(f"glide identification fails at {v}")
            glued[c] = val
        return glued
    return labels


@lru_cache(maxsize=4096)
def tube_label(p: int, i: int, n: int) -> LaurentPoly:
    """``P_n(x_i, ..., x_{i+n-1})`` with indices mod ``p``."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    return shift(cheb_recurrence(n), i, family="x", modulus=p)


@lru_cache(maxsize=4096)
def za_label(i: int, n: int) -> LaurentPoly:
    """``P_n(x_i, ..., x_{i+n-1})`` in the free ring."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return shift(cheb_recurrence(n), i, family="x")


def x_seeds(shape: Shape) -> dict[int, LaurentPoly]:
    if isinstance(shape, Tube):
        idx = range(shape.p)
    elif isinstance(shape, ZAInftyWindow):
        idx = range(shape.i_min, shape.i_max + 1)
    else:
        raise InvalidShape("symbolic seeds are not consistent on a Moebius band")
    return {i: LaurentPoly.var(VarId("x", i)) for i in idx}


# -- presentations ---------------------------------------------------------


@dataclass(frozen=True)
class MeshPresentation:
    """Generators ``y_k`` (one per vertex) and relations ``lhs = rhs``."""

    vertices: tuple[Vertex, ...]
    generators: tuple[VarId, ...]
    relations: tuple[tuple[LaurentPoly, LaurentPoly], ...]
    relation_vertices: tuple[Vertex, ...]

    def generator_of(self, v: Vertex) -> VarId:
        return self.generators[self.vertices.index(v)]


def mesh_presentation(shape: Shape) -> MeshPresentation:
    """``y_v * y_tau(v) = 1 + prod_{w -> v} y_w`` for each non-boundary vertex."""
    q = build_shape(shape)
    gens = tuple(VarId("y", k) for k in range(len(q.vertices)))
    y = {v: LaurentPoly.var(g) for v, g in zip(q.vertices, gens)}
    rels, where = [], []
    for v in q.vertices:
        if v in q.boundary:
            continue
        prod = ONE
        for w in q.incoming(v):
            prod = prod * y[w]
        rels.append((y[v] * y[q.tau[v]], 1 + prod))
        where.append(v)
    return MeshPresentation(q.vertices, gens, tuple(rels), tuple(where))


# -- Moebius numeric check -----------------------------------------------


def random_rational(rng: random.Random, bound: int = 50) -> Fraction:
    """Nonzero rational with numerator and denominator bounded by ``bound``."""
    num = rng.choice([k for k in range(-bound, bound + 1) if k])
    return Fraction(num, rng.randint(1, bound))


def moebius_sequence(r: int, start: list[Fraction], length: int) -> list[Fraction]:
    """Extend ``c_0 .. c_{r-1}`` so every ``r + 1`` window has ``P_{r+1} = 1``.

    Each new term solves ``c_k = (P_{r-1}(c_{k-r} ..) + 1) / P_r(c_{k-r} ..)``.
    """
    seq = list(start)
    while len(seq) < length:
        win = seq[len(seq) - r:]
        den = cheb_at(win)
        if den == 0:
            raise DegenerateSample("P_r vanishes on a window")
        seq.append((cheb_at(win[:-1]) + 1) / den)
    return seq


def strip_rows(seq: list[Fraction], rows: int) -> list[list[Fraction]]:
    """Mesh-propagate a finite row-1 sequence; row ``n`` has ``len(seq) - n + 1`` entries."""
    out = [[Fraction(1)] * (len(seq) + 1), list(seq)]
    for n in range(1, rows):
        cur, below = out[n], out[n - 1]
        out.append([_divide(cur[i] * cur[i + 1] - 1, below[i + 1]) for i in range(len(cur) - 1)])
    return out


def glide_holds(r: int, rows: list[list[Fraction]], glide_offset: int) -> bool:
    """``label(i, n) == label(i + n + glide_offset, r + 1 - n)`` wherever both exist."""
    checked = False
    for n in range(1, r + 1):
        m = r + 1 - n
        for i in range(len(rows[n])):
            j = i + n + glide_offset
            if 0 <= j < len(rows[m]):
                checked = True
                if rows[n][i] != rows[m][j]:
                    return False
    return checked


@dataclass
class MoebiusTrial:
    start: list[Fraction]
    windows_ok: bool
    periodic: bool
    frieze_ok: bool
    glide_ok: bool
    printed_glide_ok: bool

    @property
    def passed(self) -> bool:
        return self.windows_ok and self.periodic and self.frieze_ok and self.glide_ok


@dataclass
class MoebiusReport:
    r: int
    glide_offset: int
    period: int
    trials: list[MoebiusTrial]
    degenerate: int
    inconsistent: int

    @property
    def passed(self) -> int:
        return sum(tr.passed for tr in self.trials)

    @property
    def ok(self) -> bool:
        return self.passed == len(self.trials) and self.inconsistent == 0

    @property
    def degenerate_rate(self) -> float:
        return self.degenerate / (self.degenerate + len(self.trials))

    def as_dict(self) -> dict:
        return {
            "r": self.r,
            "glide_offset": self.glide_offset,
            "period": self.period,
            "trials": len(self.trials),
            "passed": self.passed,
            "degenerate_resampled": self.degenerate,
            "inconsistent": self.inconsistent,
            "printed_gluing_holds": all(tr.printed_glide_ok for tr in self.trials),
            "failures": [[str(c) for c in tr.start] for tr in self.trials if not tr.passed],
        }


PRINTED_GLIDE_OFFSET = -1


def moebius_trial(r: int, start: list[Fraction], glide_offset: int = 1) -> MoebiusTrial:
    """Run one seed through every check; raises DegenerateSample on zero denominators."""
    period = moebius_period(r, glide_offset)
    if period < 1:
        raise InvalidShape(f"glide offset {glide_offset} gives period {period}")
    seq = moebius_sequence(r, start, 2 * period + r + 2)
    poly = cheb_recurrence(r + 1)
    names = [t(k) for k in range(r + 1)]
    windows_ok = all(
        eval_rational(poly, dict(zip(names, seq[k:k + r + 1]))) == 1
        for k in range(len(seq) - r)
    )
    periodic = all(seq[k] == seq[k + period] for k in range(len(seq) - period))
    rows = strip_rows(seq, r + 2)
    frieze_ok = all(v == 1 for v in rows[r + 1]) and all(v == 0 for v in rows[r + 2])
    try:
        frieze_labels(Moebius(r, glide_offset), {i: seq[i] for i in range(period)})
        cyclic_ok = True
    except InconsistentFrieze:
        cyclic_ok = False
    return MoebiusTrial(
        list(start),
        windows_ok,
        periodic,
        frieze_ok and cyclic_ok,
        glide_holds(r, rows, glide_offset),
        glide_holds(r, rows, PRINTED_GLIDE_OFFSET),
    )


def moebius_numeric_check(
    r: int,
    trials: int,
    seed: int = 0,
    glide_offset: int = 1,
    sampler: Callable[[random.Random], Fraction] = random_rational,
    max_resample: int = 1000,
) -> MoebiusReport:
    """Random rational friezes on the band ``M_{r+1}``.

    Degenerate samples are redrawn and counted; a trial failing any check is
    counted as inconsistent.
    """
    if r < 1 or trials < 1:
        raise ValueError("need r >= 1 and trials >= 1")
    rng = random.Random(seed)
    out, degenerate, inconsistent = [], 0, 0
    while len(out) < trials:
        if degenerate > max_resample:
            raise DegenerateSample(f"more than {max_resample} degenerate samples")
        start = [sampler(rng) for _ in range(r)]
        try:
            trial = moebius_trial(r, start, glide_offset)
        except DegenerateSample:
            degenerate += 1
            continue
        if not trial.passed:
            inconsistent += 1
        out.append(trial)
    return MoebiusReport(r, glide_offset, moebius_period(r, glide_offset), out, degenerate, inconsistent)


# -- shape strings ---------------------------------------------------------

_SHAPE_RE = re.compile(r"^(tube|za|moebius):(.*)$")


def parse_shape(text: str) -> Shape:
    """``tube:p=3,nmax=5``, ``za:imin=-2,imax=6,nmax=4`` or ``moebius:r=4``."""
    m = _SHAPE_RE.match(text.strip())
    if not m:
        raise InvalidShape(f"bad shape string {text!r}")
    kind, rest = m.groups()
    params = {}
    for part in filter(None, rest.split(",")):
        if "=" not in part:
            raise InvalidShape(f"bad shape parameter {part!r}")
        key, val = part.split("=", 1)
        try:
            params[key.strip()] = int(val)
        except ValueError:
            raise InvalidShape(f"non-integer value in {part!r}") from None
    try:
        if kind == "tube":
            shape = Tube(params.pop("p"), params.pop("nmax"))
        elif kind == "za":
            shape = ZAInftyWindow(params.pop("imin"), params.pop("imax"), params.pop("nmax"))
        else:
            shape = Moebius(params.pop("r"), params.pop("glide", 1))
    except KeyError as exc:
        raise InvalidShape(f"missing parameter {exc.args[0]} in {text!r}") from None
    if params:
        raise InvalidShape(f"unknown parameters {sorted(params)} in {text!r}")
    _validate(shape)
    return shape
