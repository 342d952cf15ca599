from fractions import Fraction

import pytest

from gf_cohomology.errors import LieAlgebraError
from gf_cohomology.lie import (
    FiniteLieAlgebra,
    WeightedLieAlgebra,
    abelian,
    bgl,
    direct_sum,
    gl,
    orthogonal_vectors,
    restrict,
    unitary_vectors,
)


def test_gl2_bracket():
    g = gl(2)
    assert g.basis == ("E11", "E12", "E21", "E22")
    assert g.bracket(1, 2) == {0: 1, 3: -1}
    assert g.bracket(2, 1) == {0: -1, 3: 1}
    assert g.derived_dim() == 3


def test_bgl1_is_abelian():
    g = bgl(1)
    assert g.basis == ("E11", "iE11")
    assert not list(g.nonzero_brackets())


def test_bgl2_complex_structure():
    g = bgl(2)
    i12, i21 = g.basis.index("iE12"), g.basis.index("iE21")
    # [iE12, iE21] = -(E11 - E22)
    assert g.bracket(i12, i21) == {g.basis.index("E11"): -1, g.basis.index("E22"): 1}


def test_direct_sum_prefixes_and_blocks():
    s = direct_sum([gl(1), gl(2)], ["V0", "W1"])
    assert s.basis[:2] == ("V0:E11", "W1:E11")
    assert s.bracket(0, 2) == {}
    assert s.bracket(2, 3) == {1: 1, 4: -1}


def test_weight_mismatch_rejected():
    with pytest.raises(LieAlgebraError):
        WeightedLieAlgebra(["a", "b"], [0, 1], {(0, 1): {0: 1}})


def test_antisymmetry_conflict_rejected():
    with pytest.raises(LieAlgebraError):
        FiniteLieAlgebra(["a", "b"], {(0, 1): {0: 1}, (1, 0): {0: 1}})


def test_jacobi_failure_rejected():
    with pytest.raises(LieAlgebraError):
        FiniteLieAlgebra(["x", "y", "z"], {(0, 1): {1: 1}, (0, 2): {1: 1}, (1, 2): {0: 1}})


def test_orthogonal_and_unitary_subalgebras_close():
    assert restrict(gl(3), orthogonal_vectors(3), ["A12", "A13", "A23"]).dim == 3
    assert restrict(bgl(2), unitary_vectors(2), ["A12", "S12", "iE11", "iE22"]).dim == 4


def test_non_closed_span_rejected():
    g = gl(2)
    vecs = [{1: Fraction(1)}, {2: Fraction(1)}]
    with pytest.raises(LieAlgebraError):
        restrict(g, vecs, ["E12", "E21"])


def test_abelian():
    assert abelian(3).dim == 3
    assert abelian(3).derived_dim() == 0
