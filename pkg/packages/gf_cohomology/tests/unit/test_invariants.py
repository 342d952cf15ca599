from itertools import product

import pytest

from gf_cohomology.errors import AlgebraError, InfeasibleError
from gf_cohomology.invariants import (
    are_conjugate,
    centralizer_order,
    chi_images,
    concatenate,
    cycle_type_classes,
    ev,
    inv_dim_bruteforce,
    inv_dim_predicted,
    multiply,
    phi,
    psi_gamma,
    psi_pair,
    psi_pair_direct,
    psi_tilde,
    stab_evaluation,
    tilde,
    trace_invariant,
)

_GRID = [
    (r, s, n, m)
    for r, s, n, m in product(range(4), range(4), range(3), range(3))
    if r + s <= 3
]


def test_cycle_type_classes():
    classes = cycle_type_classes(3)
    assert len(classes) == 3
    assert sorted(centralizer_order(p) for p in classes) == [2, 3, 6]
    assert cycle_type_classes(0)[0].size == 0


def test_conjugacy_and_concatenation():
    assert are_conjugate((1, 0, 2), (0, 2, 1))
    assert not are_conjugate((1, 2, 0), (0, 2, 1))
    assert concatenate((0,), (0,)) == (0, 1)
    assert concatenate((1, 0), (0,)) == (1, 0, 2)


def test_phi_on_the_line():
    f = phi((0,), 1)
    assert f.bidegree == (1, 0)
    assert f.weil_degree == 2
    assert f.evaluate([0], [(0, 0, 0)], []) == 1


def test_psi_gamma_is_a_trace_pairing():
    f = psi_gamma((0,), 1, 1)
    assert f.bidegree == (0, 1)
    assert f.evaluate([0], [], [(0, 0, 0)]) == 1


def test_forms_of_different_shapes_do_not_add():
    with pytest.raises(AlgebraError):
        phi((0,), 1) + psi_gamma((0,), 1, 1)


def test_order_bound():
    with pytest.raises(InfeasibleError):
        phi((1, 2, 3, 4, 5, 0), 1)


@pytest.mark.parametrize(
    "r, s, dim_v0, dim_w, expected",
    [
        (1, 0, 1, 1, 1),
        (1, 1, 1, 1, 0),
        (1, 1, 2, 2, 1),
        (2, 0, 2, 1, 2),
        (3, 0, 2, 1, 0),
    ],
)
def test_predicted_counts(r, s, dim_v0, dim_w, expected):
    assert inv_dim_predicted(r, s, dim_v0, dim_w) == expected


@pytest.mark.parametrize("r, s, dim_v0, dim_w", [(1, 0, 1, 1), (1, 1, 1, 1), (0, 1, 1, 1), (2, 0, 2, 1), (1, 1, 2, 2)])
def test_bruteforce_matches_prediction(r, s, dim_v0, dim_w):
    assert inv_dim_bruteforce(r, s, dim_v0, dim_w) == inv_dim_predicted(r, s, dim_v0, dim_w)


@pytest.mark.parametrize("r, s, dim_v0, dim_w", _GRID)
def test_bruteforce_matches_prediction_on_the_full_grid(r, s, dim_v0, dim_w):
    assert inv_dim_bruteforce(r, s, dim_v0, dim_w) == inv_dim_predicted(r, s, dim_v0, dim_w)


def test_full_grid_has_nonzero_counts():
    assert len(_GRID) == 90
    assert sum(inv_dim_predicted(*point) for point in _GRID) > 0


@pytest.mark.parametrize("sigma, tau", [((1, 0, 2), (0, 2, 1)), ((1, 0, 2), (2, 1, 0)), ((1, 2, 0), (2, 0, 1))])
def test_phi_only_sees_the_cycle_type(sigma, tau):
    assert phi(sigma, 3).values == phi(tau, 3).values
    assert phi(sigma, 3).values != phi((0, 1, 2), 3).values


@pytest.mark.parametrize(
    "a, b, dim_v0",
    [((0,), (0,), 2), ((0,), (1, 0), 3), ((1, 0), (0,), 3), ((0,), (0, 1), 3)],
)
def test_phi_of_a_disjoint_union_is_the_product(a, b, dim_v0):
    assert phi(concatenate(a, b), dim_v0).values == multiply(phi(a, dim_v0), phi(b, dim_v0)).values


@pytest.mark.parametrize(
    "f_gamma, g_gamma, dim_v0, dim_w",
    [((0,), (0,), 2, 1), ((0,), (0,), 2, 2), ((0,), (1, 0), 3, 2), ((0,), (0, 1), 3, 1)],
)
def test_tilde_is_multiplicative(f_gamma, g_gamma, dim_v0, dim_w):
    f, g = trace_invariant(f_gamma, dim_w), trace_invariant(g_gamma, dim_w)
    product_form = tilde(f.multiply(g), dim_v0)
    assert not product_form.is_zero()
    assert product_form.values == multiply(tilde(f, dim_v0), tilde(g, dim_v0)).values


@pytest.mark.parametrize(
    "sigma, gamma, dim_v0, dim_w",
    [((0,), (0,), 2, 1), ((0,), (0,), 2, 2), ((1, 0), (0,), 3, 1), ((0,), (1, 0), 3, 1), ((0, 1), (0,), 3, 1)],
)
def test_psi_pair_matches_its_defining_sum(sigma, gamma, dim_v0, dim_w):
    direct = psi_pair_direct(sigma, gamma, dim_v0, dim_w)
    assert not direct.is_zero()
    assert psi_pair(sigma, gamma, dim_v0, dim_w).values == direct.values


@pytest.mark.parametrize("sigma", cycle_type_classes(3), ids=str)
@pytest.mark.parametrize("tau", cycle_type_classes(3), ids=str)
def test_stab_evaluation_on_three_points(sigma, tau):
    expected = centralizer_order(sigma) if are_conjugate(sigma, tau) else 0
    assert stab_evaluation(sigma, tau, 3) == expected


def test_stab_evaluation_on_conjugate_representatives():
    assert stab_evaluation((1, 2, 0), (2, 0, 1), 3) == 3
    assert stab_evaluation((1, 0, 2), (0, 2, 1), 3) == 2


@pytest.mark.parametrize(
    "sigma, tau, dim_v0, expected",
    [
        ((0,), (0,), 1, 1),
        ((0, 1), (0, 1), 2, 2),
        ((1, 0), (1, 0), 2, 2),
        ((1, 0), (0, 1), 2, 0),
    ],
)
def test_stab_evaluation(sigma, tau, dim_v0, expected):
    assert stab_evaluation(sigma, tau, dim_v0) == expected


def test_stab_evaluation_rejects_oversized_permutations():
    with pytest.raises(AlgebraError):
        stab_evaluation((0, 1), (0, 1), 1)


def test_trace_invariant_values():
    f = trace_invariant((0,), 2)
    assert f.evaluate([(1, 1)]) == 1
    assert f.evaluate([(0, 1)]) == 0


@pytest.mark.parametrize("gamma, dim_v0, dim_w", [((0,), 1, 1), ((0,), 1, 2), ((0, 1), 2, 1), ((1, 0), 2, 1)])
def test_psi_tilde_matches_direct_sum(gamma, dim_v0, dim_w):
    assert psi_tilde(gamma, dim_v0, dim_w).values == psi_gamma(gamma, dim_v0, dim_w).values


@pytest.mark.parametrize("gamma, dim_v0, dim_w", [((0,), 1, 2), ((1, 0), 2, 1)])
def test_ev_recovers_trace_invariant(gamma, dim_v0, dim_w):
    assert ev(psi_tilde(gamma, dim_v0, dim_w)).values == trace_invariant(gamma, dim_w).values


def test_ev_needs_bidegree_zero_s():
    with pytest.raises(AlgebraError):
        ev(phi((0,), 1))


def test_chi_images_and_truncation():
    images = chi_images(1, 2)
    assert set(images) == {"xi1", "eta1", "eta2"}
    assert not images["xi1"].is_zero()
    assert not images["eta1"].is_zero()
    assert images["eta2"].is_zero()
    assert multiply(images["xi1"], images["eta1"]).is_zero()
