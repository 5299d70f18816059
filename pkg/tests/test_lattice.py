"""Lattice engine: discriminant groups, overlattices, enumeration, roots."""

import random
from fractions import Fraction

import pytest

from charfive import (
    DegenerateLatticeError,
    DivisibilityError,
    EvennessViolation,
    GramLattice,
    IndefiniteLatticeError,
    RootSystemType,
    coset_vectors_of_norm,
    discriminant_group,
    dual_gram,
    e_set,
    overlattice_from_generators,
    root_type_orthogonal_to,
    roots_orthogonal_to,
    short_vectors_box,
    short_vectors_of_norm,
)
from charfive.discform import H_PRIMAL, REFERENCE_SUBGROUPS, build_S0, lift_to_dual
from charfive.intmat import det_bareiss, ldl_positive

A4_BLOCK = [[-2, 1, 0, 0], [1, -2, 1, 0], [0, 1, -2, 1], [0, 0, 1, -2]]
HL_BLOCK = [[2, 1], [1, -2]]


def five_a4_gram():
    g = [[0] * 20 for _ in range(20)]
    for j in range(5):
        for i in range(4):
            g[4 * j + i][4 * j + i] = -2
            if i < 3:
                g[4 * j + i][4 * j + i + 1] = 1
                g[4 * j + i + 1][4 * j + i] = 1
    return g


# ---------------------------------------------------------------------------
# discriminant groups and dual Gram matrices
# ---------------------------------------------------------------------------

def test_discriminant_group_s0():
    assert discriminant_group(build_S0()).invariant_factors == (5,) * 6


def test_discriminant_group_a4():
    dg = discriminant_group(A4_BLOCK)
    assert dg.invariant_factors == (5,)
    assert dg.order == 5


def test_discriminant_group_unimodular():
    dg = discriminant_group([[0, 1], [1, 0]])
    assert dg.invariant_factors == ()
    assert dg.order == 1


def test_discriminant_group_degenerate():
    with pytest.raises(DegenerateLatticeError):
        discriminant_group([[2, 2], [2, 2]])


def test_discriminant_group_projection_kernel():
    # the projection kills exactly the lattice itself
    dg = discriminant_group(A4_BLOCK)
    for row in A4_BLOCK:
        assert dg.project(list(row)) == (0,)
    assert dg.project([1, 0, 0, 0]) != (0,)


def test_dual_gram_examples():
    assert dual_gram([[2]]) == [[Fraction(1, 2)]]
    assert dual_gram(HL_BLOCK) == [
        [Fraction(2, 5), Fraction(1, 5)],
        [Fraction(1, 5), Fraction(-2, 5)],
    ]
    ident = [[1, 0], [0, 1]]
    assert dual_gram(ident) == [[Fraction(1), Fraction(0)],
                                [Fraction(0), Fraction(1)]]
    with pytest.raises(DegenerateLatticeError):
        dual_gram([[1, 1], [1, 1]])


def test_gram_lattice_validation():
    with pytest.raises(ValueError):
        GramLattice(gram=((1,),), labels=("a",))        # odd diagonal
    with pytest.raises(ValueError):
        GramLattice(gram=((2, 1), (0, 2)), labels=("a", "b"))   # asymmetric
    with pytest.raises(DegenerateLatticeError):
        GramLattice(gram=((2, 2), (2, 2)), labels=("a", "b"))
    lat = GramLattice(gram=tuple(map(tuple, HL_BLOCK)), labels=("h", "l"))
    assert lat.det() == -5
    assert lat.signature() == (1, 1)
    assert GramLattice.from_json_dict(lat.to_json_dict()) == lat


# ---------------------------------------------------------------------------
# overlattices
# ---------------------------------------------------------------------------

def test_overlattice_trivial():
    s0 = build_S0()
    ov = overlattice_from_generators(s0, [])
    assert ov.index == 1
    assert ov.disc == -(5 ** 6)
    assert ov.artin_sigma == 3
    assert ov.gram_s == s0.gram


def test_overlattice_h2():
    ov = overlattice_from_generators(
        build_S0(), [lift_to_dual((2, 2, 2, 2, 2, 0))])
    assert ov.index == 5
    assert ov.disc == -(5 ** 4)
    assert ov.artin_sigma == 2
    assert ov.disc * ov.index ** 2 == build_S0().det()


def test_overlattice_h6():
    gens = [lift_to_dual(g) for g in REFERENCE_SUBGROUPS["H_6"]]
    ov = overlattice_from_generators(build_S0(), gens)
    assert ov.index == 25
    assert ov.disc == -(5 ** 2)
    assert ov.artin_sigma == 1


def test_overlattice_rejects_non_isotropic():
    # the class of a single dual chain root has q = -4/5, not an even integer
    with pytest.raises(EvennessViolation):
        overlattice_from_generators(build_S0(), [lift_to_dual((1, 0, 0, 0, 0, 0))])
    with pytest.raises(EvennessViolation):
        overlattice_from_generators(build_S0(), [lift_to_dual((0, 0, 0, 0, 0, 1))])


def test_overlattice_rejects_bad_coordinates():
    with pytest.raises(ValueError):
        overlattice_from_generators(build_S0(), [[0.5] * 22])
    with pytest.raises(ValueError):
        overlattice_from_generators(build_S0(), [[1, 2, 3]])


def test_overlattice_even_and_integral():
    for label in ("H_1", "H_3", "H_7"):
        gens = [lift_to_dual(g) for g in REFERENCE_SUBGROUPS[label]]
        ov = overlattice_from_generators(build_S0(), gens)
        n = ov.rank
        assert all(ov.gram_s[i][i] % 2 == 0 for i in range(n))
        assert det_bareiss([list(r) for r in ov.gram_s]) == ov.disc


# ---------------------------------------------------------------------------
# short vector enumeration
# ---------------------------------------------------------------------------

def test_short_vectors_rank1():
    assert short_vectors_of_norm([[-2]], -2) == [(-1,), (1,)]


def test_short_vectors_a4():
    roots = short_vectors_of_norm(A4_BLOCK, -2)
    assert len(roots) == 20
    assert roots == short_vectors_box(A4_BLOCK, -2)


def test_short_vectors_5a4():
    # five orthogonal blocks: every root is supported in a single block,
    # so the count is 5 times the per-block count
    g = five_a4_gram()
    roots = short_vectors_of_norm(g, -2)
    assert len(roots) == 100
    for r in roots:
        blocks = {i // 4 for i, x in enumerate(r) if x}
        assert len(blocks) == 1


def test_short_vectors_rejects_indefinite():
    with pytest.raises(IndefiniteLatticeError):
        short_vectors_of_norm([[2, 0], [0, -2]], -2)
    with pytest.raises(IndefiniteLatticeError):
        short_vectors_of_norm([[2]], -2)


def test_short_vectors_rejects_nonnegative_norm():
    with pytest.raises(ValueError):
        short_vectors_of_norm([[-2]], 2)


def _random_negative_definite(rng, n, bound=8):
    while True:
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = -2 * rng.randint(1, bound // 2)
            for j in range(i):
                g[i][j] = g[j][i] = rng.randint(-3, 3)
        try:
            ldl_positive([[-x for x in row] for row in g])
        except ValueError:
            continue
        if all(abs(x) <= bound for row in g for x in row):
            return g


def test_short_vectors_against_box_oracle():
    rng = random.Random(2024)
    for _ in range(300):
        n = rng.randint(1, 5)
        g = _random_negative_definite(rng, n)
        norm = -2 * rng.randint(1, 3)
        assert short_vectors_of_norm(g, norm) == short_vectors_box(g, norm)


def test_coset_vectors_zero_shift_matches_short():
    rng = random.Random(31)
    for _ in range(50):
        n = rng.randint(1, 4)
        g = _random_negative_definite(rng, n)
        assert (coset_vectors_of_norm(g, [0] * n, -2)
                == short_vectors_of_norm(g, -2))


def test_coset_vectors_examples():
    # -2 (u + 1/2)^2 = -1/2 has the two integer solutions u = 0, -1
    assert coset_vectors_of_norm([[-2]], [Fraction(1, 2)], Fraction(-1, 2)) \
        == [(-1,), (0,)]
    # odd value is unreachable on an even rank-1 lattice
    assert coset_vectors_of_norm([[-2]], [0], -1) == []
    # positive target on a negative definite form is empty
    assert coset_vectors_of_norm([[-2]], [0], 2) == []


# ---------------------------------------------------------------------------
# root systems orthogonal to the polarization
# ---------------------------------------------------------------------------

def _overlattice(label):
    gens = [lift_to_dual(g) for g in REFERENCE_SUBGROUPS[label]]
    return overlattice_from_generators(build_S0(), gens)


def test_root_type_s0():
    ov = overlattice_from_generators(build_S0(), [])
    assert str(root_type_orthogonal_to(ov, H_PRIMAL)) == "5A4"


def test_root_type_table_rows():
    # type (1,1,0) and type (0,2,1) representatives from the isotropy table
    ov = overlattice_from_generators(build_S0(), [lift_to_dual((2, 1, 0, 0, 0, 0))])
    assert str(root_type_orthogonal_to(ov, H_PRIMAL)) == "E8+3A4"
    ov = overlattice_from_generators(build_S0(), [lift_to_dual((2, 2, 0, 0, 0, 1))])
    assert str(root_type_orthogonal_to(ov, H_PRIMAL)) == "A9+3A4"


def test_root_type_requires_square_two():
    ov = overlattice_from_generators(build_S0(), [])
    l_primal = tuple(1 if i == 21 else 0 for i in range(22))
    with pytest.raises(ValueError):
        root_type_orthogonal_to(ov, l_primal)


def test_root_ranks_bounded():
    for label in ("H_0", "H_2", "H_6"):
        ov = _overlattice(label)
        rt = root_type_orthogonal_to(ov, H_PRIMAL)
        assert rt.total_rank <= 21
        roots = roots_orthogonal_to(ov, H_PRIMAL)
        # roots and their negatives both appear, with the exact norm and
        # orthogonality re-verified by substitution
        rootset = set(roots)
        h_s = ov.s_coords_of_primal(list(H_PRIMAL))
        for r in roots:
            assert tuple(-x for x in r) in rootset
            assert ov.inner_s(r, r) == -2
            assert ov.inner_s(r, h_s) == 0


def test_identify_component_table():
    assert RootSystemType.identify_component(4, 20) == ("A", 4)
    assert RootSystemType.identify_component(9, 90) == ("A", 9)
    assert RootSystemType.identify_component(8, 240) == ("E", 8)
    assert RootSystemType.identify_component(3, 12) == ("A", 3)
    assert RootSystemType.identify_component(4, 24) == ("D", 4)
    with pytest.raises(ValueError):
        RootSystemType.identify_component(5, 21)


def test_root_system_type_str():
    rt = RootSystemType(components=(("A", 4),) * 5)
    assert str(rt) == "5A4"
    rt = RootSystemType(components=(("A", 4), ("E", 8), ("A", 4), ("A", 4)))
    assert str(rt) == "E8+3A4"


# ---------------------------------------------------------------------------
# the degree-1 elliptic set
# ---------------------------------------------------------------------------

def test_e_set_empty_cases():
    assert e_set(overlattice_from_generators(build_S0(), []), H_PRIMAL) == []
    ov = overlattice_from_generators(build_S0(), [lift_to_dual((2, 1, 0, 0, 0, 0))])
    assert e_set(ov, H_PRIMAL) == []
    assert e_set(_overlattice("H_8"), H_PRIMAL) == []


def test_e_set_nonempty_hyperbolic_case():
    # on the hyperbolic plane [[0,1],[1,0]] with h = e1 + e2 (h^2 = 2) the
    # set {e : e.h = 1, e^2 = 0} is exactly the two basis vectors
    u = GramLattice(gram=((0, 1), (1, 0)), labels=("u1", "u2"))
    ov = overlattice_from_generators(u, [])
    found = e_set(ov, (1, 1))
    assert found == [(0, 1), (1, 0)]


def test_e_set_choice_of_v1_is_irrelevant():
    u = GramLattice(gram=((0, 1), (1, 0)), labels=("u1", "u2"))
    ov = overlattice_from_generators(u, [])
    a = e_set(ov, (1, 1), v1_primal=(1, 0))
    b = e_set(ov, (1, 1), v1_primal=(0, 1))
    assert a == b
    # and for the big lattice, shifting v1 by a vector orthogonal to h
    s0 = overlattice_from_generators(build_S0(), [])
    v1 = tuple(1 if i == 21 else 0 for i in range(22))        # l, with l.h = 1
    v1_shift = list(v1)
    v1_shift[0] += 1                                          # add a chain root
    assert e_set(s0, H_PRIMAL, v1_primal=v1) \
        == e_set(s0, H_PRIMAL, v1_primal=tuple(v1_shift))


def test_e_set_divisibility_error():
    lat = GramLattice(gram=((2, 0), (0, -2)), labels=("a", "b"))
    ov = overlattice_from_generators(lat, [])
    with pytest.raises(DivisibilityError):
        e_set(ov, (1, 0))


def test_overlattice_json_shape():
    ov = _overlattice("H_2")
    data = ov.to_json_dict()
    assert set(data) == {"labels", "gram", "basis5", "disc", "sigma"}
    assert data["disc"] == -(5 ** 4)
    assert data["sigma"] == 2
    assert len(data["basis5"]) == 22
