"""Property checks over small random inputs."""
from fractions import Fraction
from functools import lru_cache

import pytest

hypothesis = pytest.importorskip("hypothesis")
from hypothesis import given, settings, strategies as st  # noqa: E402

from gf_cohomology.decompose import decompose_complex  # noqa: E402
from gf_cohomology.invariants import are_conjugate, phi  # noqa: E402
from gf_cohomology.linalg import SparseMatrix, kernel_basis, rank  # noqa: E402
from gf_cohomology.weil import LieFactor, LieProduct, weil_algebra  # noqa: E402

_W = weil_algebra(LieProduct((LieFactor("gl_real", 2, "V0"),)), 4)
_BASES = [_W.monomial_basis(q) for q in range(4)]

small = st.integers(min_value=-3, max_value=3)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4))
def test_rank_nullity(rows):
    m = SparseMatrix.from_rows(rows, cols=3)
    kernel = kernel_basis(m)
    assert rank(m) + len(kernel) == 3
    for v in kernel:
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=3), st.data())
def test_d_squared_vanishes_on_weil_elements(q, data):
    basis = _BASES[q]
    coeffs = data.draw(st.lists(small, min_size=len(basis), max_size=len(basis)))
    x = _W.from_vector([Fraction(c) for c in coeffs], basis)
    assert _W.apply_differential(_W.apply_differential(x)) == 0


@given(st.integers(min_value=1, max_value=12), st.lists(st.integers(min_value=-20, max_value=20), max_size=6))
def test_complex_decomposition_bookkeeping(order, weights):
    d = decompose_complex(order, weights)
    assert d.ambient_dim == len(weights)
    assert d.dim_v0 == sum(1 for k in weights if k % order == 0)


@lru_cache(maxsize=None)
def _phi_3(sigma):
    return phi(sigma, 3).values


@settings(max_examples=15, deadline=None)
@given(st.permutations(range(3)), st.permutations(range(3)))
def test_phi_is_a_class_function(sigma, beta):
    conjugate = tuple(beta[sigma[beta.index(i)]] for i in range(3))
    assert are_conjugate(sigma, conjugate)
    assert _phi_3(tuple(sigma)) == _phi_3(conjugate)
