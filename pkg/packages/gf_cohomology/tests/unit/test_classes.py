import pytest

from gf_cohomology.classes import (
    base_generators,
    char_class_ring,
    inertia_report,
    lie_data,
    secondary_survivors,
    vanishing_report,
)
from gf_cohomology.decompose import Decomposition, Factor, GroupAction
from gf_cohomology.errors import ModeError, QuaternionicFactorError


def test_godbillon_vey_is_a_corner_secondary(trivial_line):
    ring = char_class_ring(trivial_line, "absolute", 3)
    assert ring.truncation_bound == 2
    assert ring.betti.upto(3) == (1, 0, 0, 1)
    (gv,) = ring.secondary
    assert gv.degree == 3
    assert gv.filtration == 2
    assert gv.e_infinity == (2, 1)
    assert gv.corner
    assert ring.classes[0].kind == "primary"


def test_sign_line_has_a_degree_one_class(sign_line):
    ring = char_class_ring(sign_line, "absolute", 1)
    assert ring.truncation_bound == 0
    assert ring.betti.upto(1) == (1, 1)
    assert [c.degree for c in ring.secondary] == [1]
    assert [c.degree for c in secondary_survivors(sign_line, "relative-so", 1)] == [1]


def test_secondary_survivors_of_the_line(trivial_line):
    (gv,) = secondary_survivors(trivial_line, "relative-o", 3)
    assert (gv.degree, gv.corner) == (3, True)


@pytest.mark.parametrize("mode", ["absolute", "relative-gl"])
def test_secondary_survivors_need_an_orthogonal_mode(trivial_line, mode):
    with pytest.raises(ModeError):
        secondary_survivors(trivial_line, mode, 3)


def test_base_generators(complex_line_plus_character):
    names = [g.name for g in base_generators(complex_line_plus_character)]
    assert names == ["V0:xi1", "W1:eta1"]
    rotation = Decomposition("real", 0, factors=(Factor("1", 1, 2),), order=3)
    gens = base_generators(rotation)
    assert [(g.name, g.degree, g.kind) for g in gens] == [("W1:x1", 2, "chern-pair"), ("W1:y1", 2, "chern-pair")]


def test_vanishing_above_the_bound(trivial_line, complex_line_plus_character):
    report = vanishing_report(trivial_line)
    assert report.bound == 2
    assert report.monomials
    assert report.all_vanish
    assert report.nonzero_before_truncation == report.monomials
    assert vanishing_report(complex_line_plus_character).all_vanish


def test_modes():
    complex_d = Decomposition("complex", 1, order=1)
    with pytest.raises(ModeError):
        lie_data(complex_d, "relative-so")
    with pytest.raises(ModeError):
        lie_data(complex_d, "sideways")
    g, k = lie_data(complex_d, "absolute")
    assert k is None and g.dim == 1


def test_relative_unitary_mode():
    rotation = Decomposition("real", 0, factors=(Factor("1", 1, 2),), order=3)
    ring = char_class_ring(rotation, "relative-so", 1)
    assert ring.betti.upto(1) == (1, 1)
    assert ring.notes


def test_relative_gl_mode(complex_line_plus_character):
    ring = char_class_ring(complex_line_plus_character, "relative-gl", 2)
    assert ring.betti.upto(2) == (1, 0, 2)
    assert not ring.secondary


def test_quaternionic_rejected():
    d = Decomposition("real", 1, factors=(Factor("q", 1, 4, "quaternionic"),), source="supplied")
    with pytest.raises(QuaternionicFactorError):
        char_class_ring(d, "absolute", 2)


def test_inertia_report_per_class():
    action = GroupAction(field="real", matrices=(((1, 0), (0, 1)), ((-1, 0), (0, -1))))
    pairs = inertia_report(action, "absolute", 1)
    assert [c.label for c, _ in pairs] == ["e", "c1"]
    _, minus = pairs[1]
    assert minus.truncation_bound == 0
    assert minus.betti.upto(1) == (1, 1)
    assert any("conjugacy class" in n for n in minus.notes)
