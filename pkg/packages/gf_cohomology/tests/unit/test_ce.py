import pytest

from gf_cohomology.ce import (
    build_wx,
    ce_cohomology,
    ce_complex,
    matrix_algebra,
    required_window,
    weight_zero_cohomology,
    weight_zero_tuples,
)
from gf_cohomology.decompose import Decomposition
from gf_cohomology.errors import LieAlgebraError, WeightWindowError
from gf_cohomology.gca import cdga_cohomology
from gf_cohomology.lie import abelian, bgl, direct_sum, gl, restrict, unitary_vectors
from gf_cohomology.weil import (
    LieFactor,
    LieProduct,
    SubalgebraSpec,
    invariant_polynomials,
    relative_weil,
    weil_algebra,
)


def test_gl2_cohomology():
    assert ce_cohomology(gl(2)).ranks == (1, 1, 0, 1, 1)


def test_abelian_cohomology_is_exterior():
    assert ce_cohomology(abelian(2)).ranks == (1, 2, 1)
    assert ce_cohomology(bgl(1)).ranks == (1, 2, 1)


def test_truncated_ce_reports_unknown_top():
    table = ce_cohomology(gl(2), max_degree=1)
    assert table.ranks == (1, 1, None)


def test_windowed_algebra_has_no_full_ce_complex(trivial_line):
    with pytest.raises(LieAlgebraError):
        ce_complex(build_wx(trivial_line, 1))


def test_formal_vector_fields_on_the_line(trivial_line):
    L = build_wx(trivial_line, 1)
    assert L.basis == ("d1", "x1*d1", "x1^2*d1")
    assert L.weights == (-1, 0, 1)
    # [∂, x²∂] = 2x∂
    assert L.bracket(0, 2) == {1: 2}
    assert weight_zero_cohomology(L, 2).ranks == (1, 0, 0, 1)


def test_weight_zero_tuples(trivial_line):
    L = build_wx(trivial_line, 1)
    assert weight_zero_tuples(L, 1) == [(1,)]
    assert weight_zero_tuples(L, 2) == [(0, 2)]
    assert weight_zero_tuples(L, 3) == [(0, 1, 2)]
    assert required_window(L, 5) == 1


def test_window_too_small(trivial_line):
    L = build_wx(trivial_line, 0)
    with pytest.raises(WeightWindowError):
        weight_zero_cohomology(L, 2)


def test_matrix_algebra_blocks(complex_line_plus_character, sign_line):
    assert matrix_algebra(complex_line_plus_character).basis == ("W1:E11",)
    assert matrix_algebra(sign_line).basis == ("W-1:E11",)


def test_weight_zero_agrees_with_weil(complex_line_plus_character):
    L = build_wx(complex_line_plus_character, 1)
    wx = weight_zero_cohomology(L, 5)
    g = LieProduct((LieFactor("gl_complex", 1, "V0"), LieFactor("gl_complex", 1, "W1")))
    weil = cdga_cohomology(weil_algebra(g, 2), 5)
    assert wx.upto(5) == weil.upto(5) == (1, 0, 0, 3, 2, 0)


@pytest.mark.parametrize("m_minus1, expected", [(1, (1, 1, 0, 0, 0)), (2, (1, 1, 0, 1, 1))])
def test_weight_zero_agrees_with_weil_without_fixed_directions(m_minus1, expected):
    d = Decomposition("real", 0, m_minus1=m_minus1, order=2)
    wx = weight_zero_cohomology(build_wx(d, 0), 4)
    weil = cdga_cohomology(weil_algebra(LieProduct((LieFactor("gl_real", m_minus1, "W-1"),)), 0), 4)
    assert wx.upto(4) == weil.upto(4) == expected


@pytest.mark.parametrize(
    "factors",
    [(("gl_real", 1),), (("gl_real", 1), ("gl_real", 1)), (("bgl", 1),)],
    ids=["gl1", "gl1+gl1", "bgl1"],
)
def test_untruncated_weil_algebra_is_acyclic(factors):
    g = LieProduct(tuple(LieFactor(kind, n, f"g{i}") for i, (kind, n) in enumerate(factors)))
    assert cdga_cohomology(weil_algebra(g, None), 6).upto(6) == (1, 0, 0, 0, 0, 0, 0)


def _hilbert_series(degrees: tuple[int, ...], top: int) -> tuple[int, ...]:
    """Coefficients of ``Π 1/(1 − t^d)`` up to ``t^top``."""
    coeffs = [1] + [0] * top
    for d in degrees:
        for k in range(d, top + 1):
            coeffs[k] += coeffs[k - d]
    return tuple(coeffs)


@pytest.mark.parametrize("m", [1, pytest.param(2, marks=pytest.mark.slow)])
def test_bgl_invariants_are_doubled_trace_polynomials(m):
    g = LieProduct((LieFactor("bgl", m, "W"),))
    doubled = tuple(range(1, m + 1)) * 2
    assert invariant_polynomials(g, 4).dims == _hilbert_series(doubled, 4)


def test_hilbert_series_helper():
    assert _hilbert_series((1, 1), 4) == (1, 2, 3, 4, 5)
    assert _hilbert_series((1, 2, 1, 2), 4) == (1, 2, 5, 8, 14)


def _unitary(m: int):
    labels = []
    for i in range(m):
        for j in range(i + 1, m):
            labels += [f"A{i + 1}{j + 1}", f"S{i + 1}{j + 1}"]
        labels.append(f"iE{i + 1}{i + 1}")
    return restrict(bgl(m), unitary_vectors(m), labels)


def test_bgl1_relative_to_its_unitary_part():
    assert ce_cohomology(bgl(1)).ranks == ce_cohomology(direct_sum([_unitary(1), _unitary(1)], ["a", "b"])).ranks
    g = LieProduct((LieFactor("bgl", 1, "W1"),))
    assert relative_weil(g, SubalgebraSpec(("u",)), 0).cohomology(1).upto(1) == (1, 1)


@pytest.mark.slow
def test_complex_gl2_as_real_algebra():
    compact = direct_sum([_unitary(2), _unitary(2)], ["a", "b"])
    assert compact.dim == bgl(2).dim == 8
    assert ce_cohomology(bgl(2)).ranks == ce_cohomology(compact).ranks
