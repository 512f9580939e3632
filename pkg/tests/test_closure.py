import numpy as np
import pytest

from src.config import FOUR_POINT
from src.core import (
    CountMatrix,
    NotJordan,
    NotSymmetric,
    OrderMismatch,
    is_coherent_configuration,
    is_jordan_configuration,
    is_proper,
    is_refinement,
    jordan_closure,
    rainbow_from_colors,
    seed_from_matrices,
    seed_from_rainbow,
    subspace_closure_oracle,
    symmetrize,
    trivial_rainbow,
    wl_closure,
)


def random_seed(seed, n, symmetric):
    rng = np.random.default_rng(seed)
    matrix = rng.integers(0, 3, size=(n, n))
    if symmetric:
        matrix = np.minimum(matrix, matrix.T)
    return seed_from_matrices([CountMatrix(matrix)])


def check_closures_on(seed, symmetric):
    wl = wl_closure(seed)
    jordan = jordan_closure(seed)
    assert wl.result == subspace_closure_oracle(seed, "wl")
    assert jordan.result == subspace_closure_oracle(seed, "jordan")
    assert is_coherent_configuration(wl.result)[0]
    assert is_jordan_configuration(jordan.result)[0]
    assert is_refinement(wl.result, seed.as_rainbow())
    assert is_refinement(jordan.result, seed.as_rainbow())
    assert is_refinement(wl.result, jordan.result)
    if symmetric:
        assert is_refinement(symmetrize(wl.result), jordan.result)
    history = wl.rank_history
    assert all(a < b for a, b in zip(history, history[1:]))
    assert wl_closure(seed_from_rainbow(wl.result)).result == wl.result
    assert jordan_closure(seed_from_rainbow(jordan.result)).result == jordan.result


# seeds

def test_seed_from_weighted_matrix(four_point):
    weights = np.where(np.asarray(FOUR_POINT) == 2, 1, 0) + np.where(np.asarray(FOUR_POINT) == 3, 2, 0)
    seed = seed_from_matrices([CountMatrix(weights)])
    assert seed.rank == 4
    assert seed.as_rainbow() == four_point


def test_seed_from_pentagon_adjacency(pentagon, pentagon_adjacency):
    seed = seed_from_matrices([CountMatrix(pentagon_adjacency)])
    assert seed.as_rainbow() == pentagon


def test_empty_seed_needs_order():
    assert seed_from_matrices([], order=4).rank == 2
    with pytest.raises(OrderMismatch):
        seed_from_matrices([])


def test_seed_order_mismatch():
    with pytest.raises(OrderMismatch):
        seed_from_matrices([CountMatrix.identity(2), CountMatrix.identity(3)])


# closures

def test_wl_closure_of_scheme_is_unchanged(pentagon, thin5):
    report = wl_closure(seed_from_rainbow(pentagon))
    assert report.result == pentagon
    assert report.rounds == 1
    assert report.rank_history == [3]
    assert report.kind == "wl"
    assert wl_closure(seed_from_rainbow(thin5)).result == thin5


def test_wl_closure_of_trivial_seed():
    assert wl_closure(seed_from_rainbow(trivial_rainbow(6))).result == trivial_rainbow(6)


def test_jordan_closure_keeps_jordan_configurations(four_point, pentagon, j15):
    assert jordan_closure(seed_from_rainbow(four_point)).result == four_point
    assert jordan_closure(seed_from_rainbow(pentagon)).result == pentagon
    report = jordan_closure(seed_from_rainbow(j15))
    assert report.result == j15
    assert report.kind == "jordan"


def test_wl_closure_splits_four_point(four_point):
    report = wl_closure(seed_from_rainbow(four_point))
    assert report.result.rank > four_point.rank
    assert is_refinement(report.result, four_point)


def test_wl_closure_of_switched_scheme_is_finer(j15):
    wl = wl_closure(seed_from_rainbow(j15)).result
    assert symmetrize(wl).rank > j15.rank


def test_oracle_matches_on_small_examples(pentagon, four_point, four_point_broken):
    for rainbow in (pentagon, four_point, four_point_broken):
        seed = seed_from_rainbow(rainbow)
        assert subspace_closure_oracle(seed, "wl") == wl_closure(seed).result
        assert subspace_closure_oracle(seed, "jordan") == jordan_closure(seed).result


def test_broken_four_point_jordan_closure(four_point_broken):
    report = jordan_closure(seed_from_rainbow(four_point_broken))
    assert report.result.rank > four_point_broken.rank
    assert report.rank_history[0] == four_point_broken.rank


@pytest.mark.parametrize("seed", range(8))
def test_closures_on_random_seeds(seed):
    n = 3 + seed % 5
    check_closures_on(random_seed(seed, n, symmetric=seed % 2 == 0), seed % 2 == 0)


@pytest.mark.parametrize("seed", range(10))
def test_refining_the_seed_never_coarsens_the_closure(seed):
    rng = np.random.default_rng(500 + seed)
    n = 3 + seed % 6
    first = CountMatrix(rng.integers(0, 3, size=(n, n)))
    extra = rng.integers(0, 2, size=(n, n))
    if seed % 2 == 0:
        first = CountMatrix(np.minimum(first.cells, first.cells.T))
        extra = np.maximum(extra, extra.T)
    coarse = seed_from_matrices([first])
    fine = seed_from_matrices([first, CountMatrix(extra)])
    assert is_refinement(fine.as_rainbow(), coarse.as_rainbow())
    for closure in (wl_closure, jordan_closure):
        assert is_refinement(closure(fine).result, closure(coarse).result)


@pytest.mark.slow
def test_closures_on_many_random_seeds():
    for seed in range(100):
        n = 2 + seed % 11
        symmetric = seed % 2 == 0
        check_closures_on(random_seed(1000 + seed, n, symmetric), symmetric)


def test_is_refinement(four_point, pentagon):
    assert is_refinement(four_point, four_point)
    assert is_refinement(four_point, trivial_rainbow(4))
    assert not is_refinement(trivial_rainbow(4), four_point)
    with pytest.raises(OrderMismatch):
        is_refinement(four_point, pentagon)


# properness

def test_switched_scheme_is_proper(j15):
    report = is_proper(j15)
    assert report.proper
    assert report.jordan_rank == 5
    assert report.symmetrized_wl_rank > 5
    assert report.witness_color is not None
    wl = wl_closure(seed_from_rainbow(j15)).result
    sym = symmetrize(wl)
    assert report.wl_rank == wl.rank
    cells = sym.colors == report.witness_color
    assert (j15.colors[cells] == report.witness_parent).all()
    assert cells.sum() < (j15.colors == report.witness_parent).sum()


def test_switched_scheme_splits_a_d_class(j15):
    sym = symmetrize(wl_closure(seed_from_rainbow(j15)).result)
    d_colours = [j15.color_of("D0"), j15.color_of("D1")]
    split = [
        c for c in range(sym.rank)
        if int(j15.colors[sym.colors == c][0]) in d_colours
        and (sym.colors == c).sum() < (j15.colors == j15.colors[sym.colors == c][0]).sum()
    ]
    assert split


def test_coherent_scheme_is_improper(pentagon):
    report = is_proper(pentagon)
    assert not report.proper
    assert report.symmetrized_wl_rank == 3
    assert report.witness_color is None


def test_properness_input_errors(four_point):
    with pytest.raises(NotSymmetric):
        is_proper(four_point)
    path = rainbow_from_colors([[0, 1, 2, 2], [1, 0, 1, 2], [2, 1, 0, 1], [2, 2, 1, 0]])
    with pytest.raises(NotJordan):
        is_proper(path)
