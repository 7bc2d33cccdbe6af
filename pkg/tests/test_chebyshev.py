from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from gencheb.chebyshev import (
    PRINTED_TABLES,
    ChebSpec,
    cheb_at,
    cheb_clustermesh,
    cheb_determinant,
    cheb_rank,
    cheb_rank_clustermesh,
    cheb_rank_direct,
    cheb_recurrence,
    classical_S,
    errata,
    shift,
    table,
)
from gencheb.exactalg import ONE, ZERO, eval_rational, parse_poly, poly_div_exact, rename, t, to_str

P = parse_poly


def sympy_det(n: int):
    """Independent oracle: sympy determinant of the tridiagonal matrix."""
    syms = sympy.symbols(f"t0:{n}")
    m = sympy.zeros(n, n)
    for r in range(n):
        m[r, r] = syms[n - 1 - r]
        if r + 1 < n:
            m[r, r + 1] = m[r + 1, r] = 1
    return sympy.expand(m.det()), syms


def to_sympy(p, syms):
    lookup = {str(s): s for s in syms}
    return sympy.Add(*[c * sympy.Mul(*[lookup[str(v)] ** k for v, k in zip(p.vars, e)]) for c, e in p.terms()])


# -- worked examples --------------------------------------------------------


def test_recurrence_examples():
    assert cheb_recurrence(0) == 1
    assert cheb_recurrence(-1) == ZERO
    assert cheb_recurrence(3) == P("t0*t1*t2 - t0 - t2")
    assert cheb_recurrence(4) == P("t0*t1*t2*t3 - t0*t1 - t2*t3 - t0*t3 + 1")


def test_recurrence_variables_and_no_negative_exponents():
    for n in range(1, 9):
        p = cheb_recurrence(n)
        assert p.vars == tuple(t(k) for k in range(n))
        assert not p.has_negative_exponents()


def test_determinant_examples():
    assert cheb_determinant(1) == P("t0")
    assert cheb_determinant(2) == P("t0*t1 - 1")
    assert cheb_determinant(5) == P("t0*t1*t2*t3*t4 - t0*t1*t2 - t0*t1*t4 - t2*t3*t4 + t2 - t0*t3*t4 + t0 + t4")


@pytest.mark.parametrize("n", range(1, 9))
def test_determinant_matches_sympy(n):
    ref, syms = sympy_det(n)
    assert sympy.expand(to_sympy(cheb_determinant(n), syms) - ref) == 0


def test_clustermesh_examples():
    assert cheb_clustermesh(1) == P("t0")
    assert cheb_clustermesh(2) == P("t0*t1 - 1")
    num = cheb_recurrence(2) * shift(cheb_recurrence(2), 1) - 1
    assert poly_div_exact(num, P("t1")) == P("t0*t1*t2 - t0 - t2") == cheb_clustermesh(3)


def test_rank_examples():
    assert cheb_rank(3, 2) == P("t0^2*t1 - 2*t0")
    assert cheb_rank(5, 3) == P("t0^2*t1^2*t2 - t0^2*t1 - t0*t1^2 - 2*t0*t1*t2 + t0 + t1 + t2")
    assert cheb_rank(4, 4) == cheb_recurrence(4)


def test_classical_examples():
    assert classical_S(0) == 1
    assert classical_S(4) == P("t0^4 - 3*t0^2 + 1")
    assert classical_S(5) == P("t0^5 - 4*t0^3 + 3*t0")
    for n in range(12):
        assert classical_S(n) == cheb_rank(n, 1)


def test_chebspec_validation():
    with pytest.raises(ValueError):
        ChebSpec(-1)
    with pytest.raises(ValueError):
        ChebSpec(3, 0)
    assert ChebSpec(3, 2).build() == cheb_rank(3, 2)


# -- printed tables and errata ----------------------------------------------


@pytest.mark.parametrize("rank", [None, 2, 3, 4])
def test_printed_tables_match(rank):
    for n, text in PRINTED_TABLES[rank].items():
        assert P(text) == ChebSpec(n, rank).build(), (rank, n)


def test_printed_rank1_up_to_four():
    for n in range(1, 5):
        assert P(PRINTED_TABLES[1][n]) == classical_S(n)


def test_errata_flags_only_rank1_n5():
    report = errata()
    assert [(e["rank"], e["n"]) for e in report] == [("1", 5)]
    entry = report[0]
    assert entry["recomputed"] == "t0^5 - 4*t0^3 + 3*t0"
    assert entry["printed"] == "t_0^5- 4t_0^33t_0"


def test_table_helper():
    tab = table(2, 5, min_n=1)
    assert list(tab) == [1, 2, 3, 4, 5]
    assert tab[4] == P("t0^2*t1^2 - 3*t0*t1 + 1")


def test_high_rank_agrees_with_infinite_rank():
    for p in range(5, 9):
        for n in range(0, 6):
            assert cheb_rank(n, p) == cheb_recurrence(n)


# -- route agreement and structure ------------------------------------------


@pytest.mark.parametrize("n", range(0, 13))
def test_routes_agree(n):
    rec = cheb_recurrence(n)
    assert cheb_clustermesh(n) == rec
    if n >= 1:
        assert cheb_determinant(n) == rec


@pytest.mark.parametrize("p", range(1, 7))
def test_rank_routes_agree(p):
    for n in range(0, 13):
        folded = cheb_rank(n, p)
        assert cheb_rank_direct(n, p) == folded
        assert cheb_rank_clustermesh(n, p) == folded


def test_clustermesh_divisibility():
    for n in range(1, 13):
        num = cheb_recurrence(n) * shift(cheb_recurrence(n), 1) - 1
        q = poly_div_exact(num, shift(cheb_recurrence(n - 1), 1))
        assert q == cheb_recurrence(n + 1)


@pytest.mark.parametrize("n", range(1, 13))
def test_reversal_and_multilinearity(n):
    p = cheb_recurrence(n)
    assert rename(p, {t(k): t(n - 1 - k) for k in range(n)}) == p
    assert max(p.max_exponents().values()) == 1


def test_ones_and_twos():
    cycle = [1, 1, 0, -1, -1, 0]
    for n in range(61):
        assert cheb_at([1] * n) == cycle[n % 6]
        assert cheb_at([2] * n) == n + 1


def test_cheb_at_matches_symbolic():
    vals = [Fraction(3, 2), -2, Fraction(1, 5), 4, 7]
    point = {t(k): v for k, v in enumerate(vals)}
    assert cheb_at(vals) == eval_rational(cheb_recurrence(5), point)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=9), st.integers(0, 8))
def test_multilinear_in_each_slot(vals, k):
    # P_n is affine in each argument: f(a) + f(b) = f(a + b) + f(0)
    k %= len(vals)

    def f(v):
        w = list(vals)
        w[k] = v
        return cheb_at(w)

    assert f(3) + f(-7) == f(-4) + f(0)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 8), st.integers(-4, 4))
def test_shift_renames(n, s):
    p = shift(cheb_recurrence(n), s, family="x")
    assert {v.index for v in p.vars} == set(range(s, s + n))
    assert to_str(shift(p, 0)) == to_str(p)


def test_rank_zero_rejected():
    for fn in (cheb_rank, cheb_rank_direct, cheb_rank_clustermesh):
        with pytest.raises(ValueError):
            fn(3, 0)
    with pytest.raises(ValueError):
        cheb_determinant(0)


def test_small_constants():
    assert cheb_clustermesh(0) == ONE
    assert cheb_rank(0, 3) == ONE
