"""Verification suites behind ``gencheb verify``.

Each suite returns a plain dict with ``instances_checked``, ``failures`` (a
sorted list of instance keys) and ``ok``.  Reports contain no timing or other
run-dependent data, so identical invocations serialize identically.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable

from .chebyshev import (
    cheb_at,
    cheb_clustermesh,
    cheb_determinant,
    cheb_rank,
    cheb_rank_clustermesh,
    cheb_rank_direct,
    cheb_recurrence,
    errata,
)
from .exactalg import VarId, eval_rational, rename, substitute, t, u
from .meshquiver import (
    ModuleCoord,
    Tube,
    ZAInftyWindow,
    frieze_labels,
    mesh_presentation,
    moebius_numeric_check,
    tube_label,
    x_seeds,
)
from .multiplication import (
    TubeProductInstance,
    admissible_shifts,
    ext_dim_tube,
    hall_expansion,
    hall_sum_polys,
    prescreen,
    summed_identity,
    tube_identity,
    tube_instances,
    wild_identity,
    wild_instances,
)
from .typea import (
    TypeAModule,
    brute_force_submodule_dims,
    cc_character,
    character_table,
    cluster_variables,
    modules,
    numerators_are_01,
    presentation_roundtrip,
    submodule_dims,
    uprime,
    verify_chebyshev_character,
    verify_presentation_relation,
)

SUITES = ("presentations", "tube-mult", "wild-mult", "chebyshev-routes", "moebius")

DEFAULTS = {
    "max_r": 8,
    "roundtrip_r": 6,
    "brute_r": 4,
    "p": 5,
    "max_len": 8,
    "wild_max_len": 10,
    "max_n": 12,
    "max_rank": 6,
    "props_n": 12,
    "ones_n": 60,
    "moebius_r": 6,
    "trials": 100,
    "seed": 0,
}

JOBS_ENV = "GENCHEB_JOBS"
PRESCREEN_POINTS = 5


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV)
    if raw is None:
        return os.cpu_count() or 1
    try:
        jobs = int(raw)
    except ValueError:
        raise ValueError(f"{JOBS_ENV} must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise ValueError(f"{JOBS_ENV} must be >= 1")
    return jobs


def _run(fn: Callable, tasks: list, jobs: int) -> list:
    """Map ``fn`` over ``tasks`` keeping input order."""
    if jobs <= 1 or len(tasks) < 2:
        return [fn(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def _report(checks: Iterable[tuple[str, bool]], **extra) -> dict:
    checks = list(checks)
    failures = sorted(key for key, ok in checks if not ok)
    return {"instances_checked": len(checks), "failures": failures, "ok": not failures, **extra}


def _points(key: str, variables, count: int = PRESCREEN_POINTS) -> list[dict]:
    rng = random.Random(key)
    return [
        {v: Fraction(rng.choice([-1, 1]) * rng.randint(1, 30), rng.randint(1, 30)) for v in variables}
        for _ in range(count)
    ]


# -- presentations ---------------------------------------------------------


def suite_presentations(max_r: int = 8, roundtrip_r: int = 6, brute_r: int = 4, mesh_p: int = 5,
                        mesh_n: int = 8) -> dict:
    checks = []
    for r in range(1, max_r + 1):
        for i in range(r):
            checks.append((f"uprime:r={r},i={i}", cc_character(TypeAModule(r, i, 1)) == uprime(r, i)))
        for m in modules(r):
            key = f"r={r},{m.key}"
            checks.append((f"chebyshev-character:{key}", verify_chebyshev_character(r, m.i, m.n)))
            ones = {u(k): 1 for k in range(r)}
            checks.append((f"eval-at-1:{key}", eval_rational(cc_character(m), ones) == m.n + 1))
        checks.append((f"relation:r={r}", verify_presentation_relation(r)))
        count = len(character_table(r))
        checks.append((f"count:r={r}", count == r * (r + 1) // 2))
        checks.append((f"distinct:r={r}", len(set(cluster_variables(r))) == r * (r + 3) // 2))
        if r <= roundtrip_r:
            checks.append((f"roundtrip:r={r}", presentation_roundtrip(r)))
        if r <= brute_r:
            for m in modules(r):
                same = sorted(submodule_dims(m)) == sorted(brute_force_submodule_dims(m))
                checks.append((f"submodules:r={r},{m.key}", same))
    for p in range(1, mesh_p + 1):
        checks.append((f"mesh:tube:p={p},nmax={mesh_n}", _mesh_holds(Tube(p, mesh_n))))
    checks.append((f"mesh:za:imin=0,imax={mesh_n},nmax={mesh_n}",
                   _mesh_holds(ZAInftyWindow(0, mesh_n, mesh_n))))
    coefficient_one = {str(r): numerators_are_01(r) for r in range(1, max_r + 1)}
    return _report(checks, coefficients_all_one=coefficient_one)


def _mesh_holds(shape) -> bool:
    """The symbolic frieze satisfies every relation of the mesh presentation."""
    labels = frieze_labels(shape, x_seeds(shape))
    pres = mesh_presentation(shape)
    sigma = {}
    for v, g in zip(pres.vertices, pres.generators):
        if v in labels:
            sigma[g] = labels[v]
    for (lhs, rhs), v in zip(pres.relations, pres.relation_vertices):
        if not all(g in sigma for g in lhs.vars + rhs.vars):
            continue
        if substitute(lhs, sigma) != substitute(rhs, sigma):
            return False
    return True


# -- tube multiplication ---------------------------------------------------


def _tube_task(inst: TubeProductInstance) -> tuple[str, bool]:
    res = tube_identity(inst)
    variables = [VarId("x", k) for k in range(inst.p)]
    first = (ModuleCoord(inst.j, inst.m), ModuleCoord(0, inst.n))
    fast = prescreen(inst.p, first, res.decomposition, _points(inst.key, variables))
    return inst.key, res.equal and fast == res.equal


def _summed_task(args: tuple[int, int, int, int]) -> tuple[str, bool]:
    p, n, m, j = args
    key = f"summed:p={p},n={n},m={m},j={j}"
    res = summed_identity(p, n, m, j)
    ok = res.equal and res.dim == ext_dim_tube(p, n, m, j)
    if ok and res.dim == 1:
        (k,) = admissible_shifts(p, n, m, j)
        ok = res.rhs == tube_identity(TubeProductInstance(p, n, m, j, k)).rhs
    return key, ok


def worked_example() -> bool:
    """``2 X_{R_0} X_{R_1^(3)} = X_{R_0^(4)} + X_{R_2^(2)} + X_{R_1^(4)} + X_{R_1^(2)}`` at rank 4."""
    dim, terms = hall_expansion(4, ModuleCoord(0, 1), ModuleCoord(1, 3))
    lhs = 2 * tube_label(4, 0, 1) * tube_label(4, 1, 3)
    rhs = tube_label(4, 0, 4) + tube_label(4, 2, 2) + tube_label(4, 1, 4) + tube_label(4, 1, 2)
    return dim == 2 and lhs == rhs and hall_sum_polys(4, terms) == rhs


def suite_tube_mult(p: int = 5, max_len: int = 8, jobs: int = 1) -> dict:
    insts = [inst for q in range(1, p + 1) for inst in tube_instances(q, max_len)]
    summed = [
        (q, n, m, j)
        for q in range(1, p + 1)
        for n in range(1, max_len + 1)
        for m in range(1, max_len + 1)
        for j in range(q)
        if ext_dim_tube(q, n, m, j) > 0
    ]
    checks = _run(_tube_task, insts, jobs) + _run(_summed_task, summed, jobs)
    checks.append(("worked-example:p=4", worked_example()))
    return _report(checks, tube_instances=len(insts), summed_instances=len(summed))


# -- wild multiplication ---------------------------------------------------


def _wild_task(args: tuple[int, int, int]) -> tuple[str, bool]:
    n, m, j = args
    key = f"n={n},m={m},j={j}"
    res = wild_identity(n, m, j)
    variables = [VarId("x", k) for k in range(n + m + 1)]
    fast = prescreen(None, (ModuleCoord(j, m), ModuleCoord(0, n)), res.decomposition, _points(key, variables))
    return key, res.equal and fast == res.equal


def suite_wild_mult(max_len: int = 10, jobs: int = 1) -> dict:
    return _report(_run(_wild_task, wild_instances(max_len), jobs))


# -- Chebyshev routes and structural properties ----------------------------


def suite_chebyshev_routes(max_n: int = 12, max_rank: int = 6, props_n: int = 12, ones_n: int = 60) -> dict:
    checks = []
    for n in range(1, max_n + 1):
        rec = cheb_recurrence(n)
        checks.append((f"determinant:n={n}", cheb_determinant(n) == rec))
        checks.append((f"clustermesh:n={n}", cheb_clustermesh(n) == rec))
        for p in range(1, max_rank + 1):
            folded = cheb_rank(n, p)
            checks.append((f"rank-direct:p={p},n={n}", cheb_rank_direct(n, p) == folded))
            checks.append((f"rank-clustermesh:p={p},n={n}", cheb_rank_clustermesh(n, p) == folded))
    for n in range(1, props_n + 1):
        rec = cheb_recurrence(n)
        rev = rename(rec, {t(k): t(n - 1 - k) for k in range(n)})
        checks.append((f"reversal:n={n}", rev == rec))
        checks.append((f"multilinear:n={n}", all(e <= 1 for e in rec.max_exponents().values())))
    cycle = [1, 1, 0, -1, -1, 0]
    for n in range(0, ones_n + 1):
        checks.append((f"ones:n={n}", cheb_at([1] * n) == cycle[n % 6]))
        checks.append((f"twos:n={n}", cheb_at([2] * n) == n + 1))
    return _report(checks)


# -- Moebius band ----------------------------------------------------------


def suite_moebius(max_r: int = 6, trials: int = 100, seed: int = 0, max_degenerate_rate: float = 0.05) -> dict:
    checks, per_r = [], {}
    for r in range(1, max_r + 1):
        rep = moebius_numeric_check(r, trials, seed=seed)
        per_r[str(r)] = rep.as_dict()
        checks.append((f"r={r}", rep.ok and rep.degenerate_rate < max_degenerate_rate))
    return _report(checks, bands=per_r)


# -- everything ------------------------------------------------------------


def suite_all(jobs: int = 1, **bounds) -> dict:
    b = {**DEFAULTS, **bounds}
    suites = {
        "chebyshev-routes": suite_chebyshev_routes(b["max_n"], b["max_rank"], b["props_n"], b["ones_n"]),
        "moebius": suite_moebius(b["moebius_r"], b["trials"], b["seed"]),
        "presentations": suite_presentations(b["max_r"], b["roundtrip_r"], b["brute_r"]),
        "tube-mult": suite_tube_mult(b["p"], b["max_len"], jobs),
        "wild-mult": suite_wild_mult(b["wild_max_len"], jobs),
    }
    failures = sorted(f"{name}:{key}" for name, rep in suites.items() for key in rep["failures"])
    return {
        "suites": suites,
        "instances_checked": sum(rep["instances_checked"] for rep in suites.values()),
        "failures": failures,
        "ok": not failures,
        "errata": errata(),
    }
