import itertools

import pytest

from gencheb.chebyshev import cheb_recurrence
from gencheb.errors import DimensionMismatch
from gencheb.exactalg import LaurentPoly, eval_rational, parse_poly, substitute, t, u
from gencheb.typea import (
    QuiverA,
    TypeAModule,
    brute_force_submodule_dims,
    cc_character,
    character_table,
    chebyshev_in_simples,
    cluster_variables,
    dim_vector,
    euler_form,
    modules,
    numerators_are_01,
    presentation_image,
    presentation_roundtrip,
    shifted_projective_character,
    submodule_dims,
    uprime,
    verify_chebyshev_character,
    verify_presentation_relation,
    y_sequence,
)

P = parse_poly


def alpha(r, i):
    return tuple(1 if k == i else 0 for k in range(r))


# -- dimension vectors and Euler form ---------------------------------------


def test_dim_vector_examples():
    assert dim_vector(TypeAModule(3, 0, 2)) == (1, 1, 0)
    assert dim_vector(TypeAModule(3, 2, 1)) == (0, 0, 1)
    assert dim_vector(TypeAModule(3, 1, 0)) == (0, 0, 0)


def test_module_validation():
    for args in ((0, 0, 1), (3, 3, 1), (3, 1, 3), (3, 0, -1)):
        with pytest.raises(ValueError):
            TypeAModule(*args)
    assert TypeAModule(3, 0, 3).key == "S(0,3)"


def test_quiver_arrows():
    assert QuiverA(4).arrows == ((1, 0), (2, 1), (3, 2))
    assert QuiverA(1).arrows == ()


def test_euler_form_examples():
    assert euler_form(alpha(2, 1), alpha(2, 0)) == -1
    assert euler_form(alpha(2, 0), alpha(2, 1)) == 0
    for r in range(1, 5):
        for i in range(r):
            assert euler_form(alpha(r, i), alpha(r, i)) == 1
    with pytest.raises(DimensionMismatch):
        euler_form((1, 0), (1, 0, 0))


def test_euler_form_bilinear():
    vecs = list(itertools.product(range(3), repeat=3))[:12]
    for d, e, f in itertools.product(vecs, repeat=3):
        s = tuple(a + b for a, b in zip(d, e))
        assert euler_form(s, f) == euler_form(d, f) + euler_form(e, f)
        assert euler_form(f, s) == euler_form(f, d) + euler_form(f, e)


# -- submodules -------------------------------------------------------------


def test_submodule_examples():
    assert submodule_dims(TypeAModule(2, 0, 2)) == [(0, 0), (1, 0), (1, 1)]
    assert submodule_dims(TypeAModule(3, 1, 1)) == [(0, 0, 0), (0, 1, 0)]
    assert submodule_dims(TypeAModule(3, 1, 0)) == [(0, 0, 0)]


@pytest.mark.parametrize("r", range(1, 5))
def test_submodules_match_brute_force(r):
    for m in modules(r):
        assert sorted(submodule_dims(m)) == sorted(brute_force_submodule_dims(m))


# -- characters -------------------------------------------------------------


def hand_cc(m: TypeAModule) -> LaurentPoly:
    """Independent CC sum: exponent of u_j is -(e_j - e_{j+1}) - (rest_j - rest_{j-1})."""
    d = dim_vector(m)
    acc = LaurentPoly.constant(0)
    for e in brute_force_submodule_dims(m):
        rest = [a - b for a, b in zip(d, e)]
        exps = {}
        for j in range(m.r):
            # <e, a_j> = e_j - e_{j+1} (arrow j+1 -> j); <a_j, f> = f_j - f_{j-1} (arrow j -> j-1)
            left = e[j] - (e[j + 1] if j + 1 < m.r else 0)
            right = rest[j] - (rest[j - 1] if j >= 1 else 0)
            exps[u(j)] = -left - right
        acc = acc + LaurentPoly.monomial(1, exps)
    return acc


def test_cc_examples():
    assert cc_character(TypeAModule(2, 0, 1)) == P("u0^-1 + u0^-1*u1")
    assert cc_character(TypeAModule(2, 0, 2)) == P("u0^-1*u1^-1 + u1^-1 + u0^-1")
    assert cc_character(TypeAModule(1, 0, 1)) == P("2*u0^-1")
    assert cc_character(TypeAModule(3, 1, 0)) == 1
    assert shifted_projective_character(3, 2) == P("u2")


@pytest.mark.parametrize("r", range(1, 6))
def test_cc_matches_hand_formula(r):
    for m in modules(r):
        assert cc_character(m) == hand_cc(m)


def test_uprime_examples():
    assert uprime(2, 0) == P("u0^-1 + u0^-1*u1")
    assert uprime(2, 1) == P("u0*u1^-1 + u1^-1")
    assert uprime(1, 0) == P("2*u0^-1")


@pytest.mark.parametrize("r", range(1, 9))
def test_simple_characters_are_uprime(r):
    for i in range(r):
        assert cc_character(TypeAModule(r, i, 1)) == uprime(r, i)


def test_chebyshev_character_examples():
    assert verify_chebyshev_character(2, 0, 2)
    assert chebyshev_in_simples(2, 0, 2) == P("u0^-1*u1^-1 + u1^-1 + u0^-1")
    assert verify_chebyshev_character(3, 0, 3)
    for r in range(1, 5):
        for i in range(r):
            assert verify_chebyshev_character(r, i, 1)
    with pytest.raises(ValueError):
        verify_chebyshev_character(3, 0, 0)


@pytest.mark.parametrize("r", range(1, 9))
def test_chebyshev_character_all(r):
    for m in modules(r):
        assert verify_chebyshev_character(r, m.i, m.n)


@pytest.mark.parametrize("r", range(1, 9))
def test_presentation_relation(r):
    assert verify_presentation_relation(r)


def test_presentation_relation_r1_by_hand():
    sigma = presentation_image(1)
    assert sigma == {t(0): P("2*u0^-1"), t(1): P("u0")}
    # P_2(t0, t1) = t0*t1 - 1 becomes 2*u0^-1 * u0 - 1
    assert substitute(cheb_recurrence(2), sigma) == 1


@pytest.mark.parametrize("r", range(1, 7))
def test_presentation_roundtrip(r):
    assert presentation_roundtrip(r)


def test_y_sequence_small():
    ys = y_sequence(2)
    assert ys[2] == 1 and ys[1] == P("t2")
    assert ys[0] == P("t1*t2 - 1")
    assert ys[-1] == cheb_recurrence(3)


@pytest.mark.parametrize("r", range(1, 9))
def test_counts_and_evaluation(r):
    table = character_table(r)
    assert len(table) == r * (r + 1) // 2
    ones = {u(k): 1 for k in range(r)}
    for m, x in table.items():
        assert eval_rational(x, ones) == m.n + 1
        assert all(c > 0 for c in x.coefficients())
    assert len(set(cluster_variables(r))) == r * (r + 3) // 2


@pytest.mark.parametrize("r", range(1, 9))
def test_denominator_is_dimension_vector(r):
    # X = N(u) / prod u_j^d_j with N coprime to every u_j
    for m, x in character_table(r).items():
        low = x.min_exponents()
        d = dim_vector(m)
        assert [min(low.get(u(j), 0), 0) for j in range(r)] == [-k for k in d]


def test_denominator_monomial_need_not_occur():
    # the bare monomial u^-dim M is absent once the support has a right neighbour
    x = cc_character(TypeAModule(4, 0, 2))
    assert x == P("u0^-1*u2 + u1^-1 + u0^-1*u1^-1*u2")
    assert x.coefficient({u(0): -1, u(1): -1}) == 0


def test_numerators_report():
    assert not numerators_are_01(1)
    assert all(numerators_are_01(r) for r in range(2, 9))
