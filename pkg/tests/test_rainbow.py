import numpy as np
import pytest

from src.core import (
    ArithmeticOverflow,
    CountMatrix,
    NonSquare,
    NotARainbow,
    OrderMismatch,
    Relation,
    checked_matmul,
    close_colouring,
    compose,
    fibers,
    from_relations,
    fuse,
    is_canonical,
    rainbow_from_colors,
    refine_by_values,
    relabel_points,
    relation_of,
    relational_star,
    standard_basis,
    star_doubled,
    structure_report,
    symmetrize,
    thin_cyclic_scheme,
    transpose_map,
    trivial_rainbow,
    valencies,
)
from src.core.rainbow import assemble_rainbow


def random_rainbow(seed, n=6, values=3, symmetric=False):
    rng = np.random.default_rng(seed)
    matrix = rng.integers(0, values, size=(n, n))
    if symmetric:
        matrix = np.minimum(matrix, matrix.T)
    colors, rank = close_colouring(matrix)
    return assemble_rainbow(colors, rank)


# construction and validation

def test_four_point_is_canonical_rainbow(four_point):
    assert four_point.order == 4
    assert four_point.rank == 4
    assert four_point.transpose == (0, 1, 3, 2)
    assert four_point.labels == ("X", "Y", "Z", "W")
    assert four_point.is_homogeneous()
    assert not four_point.is_symmetric()


def test_single_point_has_rank_one():
    rainbow = rainbow_from_colors([[0]])
    assert rainbow.rank == 1
    assert rainbow.transpose == (0,)


def test_two_point_directed_pair():
    rainbow = rainbow_from_colors([[0, 1], [2, 0]])
    assert rainbow.rank == 3
    assert transpose_map(rainbow) == [0, 2, 1]


def test_non_square_matrix_rejected():
    with pytest.raises(NonSquare):
        rainbow_from_colors([[0, 1, 1], [1, 0, 1]])


def test_diagonal_separation_enforced():
    with pytest.raises(NotARainbow) as info:
        rainbow_from_colors([[0, 0], [1, 0]])
    assert "diagonal" in info.value.reason


def test_transpose_closure_enforced():
    with pytest.raises(NotARainbow) as info:
        rainbow_from_colors([[0, 1, 1], [1, 0, 2], [2, 1, 0]])
    assert "transpose" in info.value.reason


def test_colours_renumbered_by_first_occurrence():
    rainbow = rainbow_from_colors([[5, 7], [7, 5]])
    assert rainbow.to_rows() == [[0, 1], [1, 0]]
    assert not is_canonical([[5, 7], [7, 5]])
    assert is_canonical(rainbow.colors)


def test_labels_follow_renumbering():
    rainbow = rainbow_from_colors([[1, 0], [0, 1]], labels=["a", "b"])
    assert rainbow.labels == ("b", "a")
    assert rainbow.color_of("b") == 0
    with pytest.raises(KeyError):
        rainbow.color_of("c")


def test_colours_are_immutable(four_point):
    with pytest.raises(ValueError):
        four_point.colors[0, 0] = 3


def test_canonical_numbering_idempotent():
    for seed in range(10):
        rainbow = random_rainbow(seed)
        assert rainbow_from_colors(rainbow.colors) == rainbow


def test_transpose_is_involution_fixing_diagonal():
    for seed in range(10):
        rainbow = random_rainbow(seed)
        t = rainbow.transpose
        assert all(t[t[c]] == c for c in range(rainbow.rank))
        assert all(t[c] == c for c in rainbow.diagonal_colors())


# products

def test_identity_composes_to_identity():
    identity = Relation.identity(4)
    assert compose(identity, identity) == identity.counts()


def test_compose_single_pairs():
    first = Relation.from_pairs(3, [(0, 1)])
    second = Relation.from_pairs(3, [(1, 2)])
    assert compose(first, second).support() == Relation.from_pairs(3, [(0, 2)])


def test_pentagon_square(pentagon_adjacency):
    a = CountMatrix(pentagon_adjacency)
    identity = CountMatrix.identity(5)
    complement = CountMatrix.ones(5) - identity - a
    assert compose(a, a) == identity * 2 + complement


def test_compose_order_mismatch():
    with pytest.raises(OrderMismatch):
        compose(Relation.identity(2), Relation.identity(3))


def test_star_of_identity():
    identity = Relation.identity(3)
    assert star_doubled(identity, identity) == identity.counts() * 2


def test_four_point_star(four_point):
    x, y, z, w = standard_basis(four_point).counts()
    assert star_doubled(z, w) == (x + y) * 2


def test_thin_cyclic_star(thin3):
    basis = standard_basis(thin3).counts()
    assert star_doubled(basis[1], basis[1]) == basis[2] * 2


def test_star_commutes_and_transposes():
    for seed in range(5):
        basis = standard_basis(random_rainbow(seed)).counts()
        for a in basis:
            for b in basis:
                assert star_doubled(a, b) == star_doubled(b, a)
                assert compose(a, b).transpose() == compose(b.transpose(), a.transpose())


def test_relational_star_is_support_of_star():
    r = Relation.from_pairs(4, [(0, 1), (2, 3)])
    s = Relation.from_pairs(4, [(1, 2)])
    assert relational_star(r, s) == Relation.from_pairs(4, [(0, 2), (1, 3)])
    assert relational_star(Relation.identity(4), r) == r


def test_checked_matmul_refuses_overflow():
    big = np.full((2, 2), 2 ** 40, dtype=np.int64)
    with pytest.raises(ArithmeticOverflow):
        checked_matmul(big, big)
    huge = CountMatrix([[2 ** 62]])
    with pytest.raises(ArithmeticOverflow):
        huge * 4
    with pytest.raises(ArithmeticOverflow):
        huge + huge
    with pytest.raises(ArithmeticOverflow):
        huge - CountMatrix([[-(2 ** 62)]])
    assert (CountMatrix([[2 ** 30]]) * 4).cells[0, 0] == 2 ** 32


# basis conversions

def test_standard_basis_of_trivial_rainbow():
    basis = standard_basis(trivial_rainbow(3))
    assert len(basis) == 2
    assert basis[0] == Relation.identity(3)
    assert basis[1] == Relation(~np.eye(3, dtype=bool))


def test_standard_basis_partitions_square(four_point):
    basis = standard_basis(four_point)
    assert [relation.size for relation in basis] == [4, 4, 4, 4]
    assert from_relations(list(basis)) == four_point


def test_from_relations_rejects_overlap():
    with pytest.raises(NotARainbow):
        from_relations([Relation.identity(2), Relation(np.ones((2, 2), dtype=bool))])


# symmetrisation and fusion

def test_symmetrize_thin_cyclic(thin5, pentagon):
    merged = symmetrize(thin5)
    assert merged.rank == 3
    assert merged == pentagon
    assert merged.labels == ("0", "1+4", "2+3")


def test_symmetrize_idempotent():
    for seed in range(5):
        once = symmetrize(random_rainbow(seed))
        assert once.is_symmetric()
        assert symmetrize(once) == once


def test_fuse_four_point(four_point):
    fused = fuse(four_point, [[0], [1], [2, 3]])
    assert fused.rank == 3
    assert fused.is_symmetric()
    assert fused.labels == ("X", "Y", "Z+W")


def test_fuse_across_diagonal_rejected(four_point):
    with pytest.raises(NotARainbow):
        fuse(four_point, [[0, 1], [2], [3]])


def test_fuse_requires_partition(four_point):
    with pytest.raises(NotARainbow):
        fuse(four_point, [[0], [1], [2]])


# refinement

def test_refine_by_constant_keeps_rainbow(four_point):
    assert refine_by_values(four_point, CountMatrix.ones(4)) == four_point


def test_refine_trivial_by_pentagon(pentagon, pentagon_adjacency):
    refined = refine_by_values(trivial_rainbow(5), CountMatrix(pentagon_adjacency))
    assert refined == pentagon


def test_refine_refines():
    base = random_rainbow(3)
    refined = refine_by_values(base, CountMatrix(np.arange(36).reshape(6, 6) % 4))
    pairs = set(zip(refined.colors.reshape(-1).tolist(), base.colors.reshape(-1).tolist()))
    assert len(pairs) == refined.rank


def test_relabel_points(four_point):
    assert relabel_points(four_point, [0, 1, 2, 3]) == four_point
    swapped = relabel_points(four_point, [2, 3, 0, 1])
    assert swapped.rank == 4
    assert relation_of(swapped, swapped.color_of("Z")).pairs()[0] == (2, 0)
    with pytest.raises(OrderMismatch):
        relabel_points(four_point, [0, 0, 1, 2])


# structure

def test_fibers(four_point, two_fibers):
    assert fibers(four_point) == [(0, 1, 2, 3)]
    assert fibers(two_fibers) == [(0, 1, 2), (3, 4)]


def test_structure_report(four_point):
    report = structure_report(four_point)
    assert report.homogeneous and not report.symmetric and not report.regular
    assert report.valencies == (1, 1, None, None)
    assert report.valency_markers()[2] == "varies"
    assert valencies(trivial_rainbow(6)) == (1, 5)


def test_thin_scheme_valencies():
    assert valencies(thin_cyclic_scheme(4)) == (1, 1, 1, 1)
    assert structure_report(thin_cyclic_scheme(1)).regular
