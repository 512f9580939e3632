from itertools import permutations
from math import factorial

import numpy as np
import pytest

from src.core import (
    BadFiberIndex,
    BaseInvalid,
    CoverSpec,
    DivisibilityError,
    SpecInvalid,
    SrgParams,
    WfdfBuilder,
    WfdfSpec,
    Z3Space,
    algebraically_isomorphic,
    blow_up,
    build_cyclotomic_base,
    build_switched,
    build_wfdf,
    check_imprimitive_fusions,
    count_diamond_tables,
    default_wfdf_spec,
    e_classes,
    example_rainbow,
    gf_table,
    hoffman_coclique_bound,
    is_coherent_configuration,
    is_jordan_configuration,
    is_proper,
    iter_symmetric_homogeneous,
    make_diamond,
    parameter_level_proper,
    random_wfdf_spec,
    relation_of,
    srg_check,
    switched_label_map,
    symmetric_group_scheme,
    symmetrize,
    thin_cyclic_scheme,
    valencies,
    wfdf_parameters,
)
from src.core.constructions.diamond import DiamondTable
from src.core.constructions.switching import switched_labels


# finite fields

def test_gf4_arithmetic():
    field = gf_table(4)
    assert field.mul(2, 2) == 3
    assert field.mul(2, 3) == 1
    assert field.add(2, 3) == 1
    assert field.inv(3) == 2
    assert sorted(field.exp) == [1, 2, 3]


@pytest.mark.parametrize("q", [8, 16])
def test_gf_inverses(q):
    field = gf_table(q)
    for a in range(1, q):
        assert field.mul(a, field.inv(a)) == 1
        assert field.power(field.log_of(a)) == a


@pytest.mark.parametrize("q", [2, 6, 32])
def test_unsupported_fields(q):
    with pytest.raises(SpecInvalid):
        gf_table(q)


# diamonds and specs

def test_z3_space():
    space = Z3Space(2)
    assert len(space.vectors) == 9
    assert space.r == 4
    assert space.normals.tolist() == [[0, 1], [1, 0], [1, 1], [1, 2]]
    assert all(space.kernel_size(i) == 3 for i in range(space.r))


def test_cyclic_diamond():
    table = make_diamond(1)
    assert table.to_rows() == [[0, 1], [1, 0]]
    assert make_diamond(4).op(3, 1) == 2


def test_random_diamonds_are_valid_and_seeded():
    for seed in range(10):
        table = make_diamond(4, "random", seed)
        table.validate()
        assert make_diamond(4, "random", seed) == table


def test_invalid_diamond_rejected():
    with pytest.raises(SpecInvalid):
        DiamondTable(((1, 0), (1, 0))).validate()
    with pytest.raises(SpecInvalid):
        make_diamond(2, "triangular")


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_diamond_count(r):
    assert count_diamond_tables(r) == factorial(r) ** (r + 1)


def test_diamond_count_limited():
    with pytest.raises(SpecInvalid):
        count_diamond_tables(4)


def test_wfdf_spec_json_form():
    spec = random_wfdf_spec(2, seed=7)
    data = spec.to_dict()
    assert set(data) == {"d", "diamond", "sigma", "theta"}
    assert len(data["sigma"]) == 10
    assert set(data["theta"]) <= {"+", "-"}
    assert WfdfSpec.from_dict(data) == spec


def test_wfdf_spec_rejects_bad_input():
    data = default_wfdf_spec(1).to_dict()
    with pytest.raises(SpecInvalid):
        WfdfSpec.from_dict({**data, "theta": ["*"]})
    with pytest.raises(SpecInvalid):
        WfdfSpec.from_dict({**data, "sigma": [[0, 0, 1]]})
    with pytest.raises(SpecInvalid):
        WfdfSpec.from_dict({"d": 1})


def test_large_dimension_needs_flag(monkeypatch):
    monkeypatch.delenv("SCHEMEMATE_ALLOW_LARGE_D", raising=False)
    with pytest.raises(SpecInvalid):
        default_wfdf_spec(4)
    with pytest.raises(SpecInvalid):
        default_wfdf_spec(0)


# WFDF schemes

def test_wfdf_d1():
    scheme = build_wfdf(default_wfdf_spec(1))
    assert scheme.order == 6
    assert scheme.rank == 5
    assert scheme.is_symmetric()
    assert not is_proper(scheme).proper


def test_wfdf_d1_matches_symmetrized_s3():
    scheme = build_wfdf(default_wfdf_spec(1))
    s3 = symmetrize(symmetric_group_scheme(3))
    assert s3.rank == 5
    _, first = is_jordan_configuration(scheme)
    _, second = is_jordan_configuration(s3)
    assert any(
        algebraically_isomorphic(first, second, (0,) + perm)
        for perm in permutations(range(1, 5))
    )


def test_wfdf_d2_parameters(wfdf2):
    expected = wfdf_parameters(2)
    assert wfdf2.order == expected["order"] == 45
    assert sorted(valencies(wfdf2)) == [1, 8, 12, 12, 12]
    for name in ("R1", "R2", "R3"):
        params = srg_check(relation_of(wfdf2, wfdf2.color_of(name)))
        assert params == SrgParams(45, 12, 3, 3)
    assert srg_check(relation_of(wfdf2, wfdf2.color_of("S"))) == SrgParams(45, 8, 7, 0)
    assert expected["srg_r"] == (45, 12, 3, 3)


def test_wfdf_blocks_meet_hoffman_bound(wfdf2):
    bound = hoffman_coclique_bound(SrgParams(45, 12, 3, 3))
    s_cells = relation_of(wfdf2, wfdf2.color_of("S")).cells
    blocks = {tuple(sorted({p, *np.flatnonzero(s_cells[p]).tolist()})) for p in range(wfdf2.order)}
    assert len(blocks) == 5
    assert all(len(block) == bound for block in blocks)
    for name in ("R1", "R2", "R3"):
        cells = relation_of(wfdf2, wfdf2.color_of(name)).cells
        for block in blocks:
            assert not cells[np.ix_(block, block)].any()


def test_wfdf_is_jordan_not_coherent(wfdf2):
    assert is_jordan_configuration(wfdf2)[0]
    assert not is_coherent_configuration(wfdf2)[0]
    assert check_imprimitive_fusions(wfdf2)


def test_wfdf_labels(wfdf2):
    assert set(wfdf2.labels) == {"1", "S", "R1", "R2", "R3"}
    assert wfdf2.color_of("1") == 0
    assert wfdf2.color_of("S") == 1


def test_parameter_level_properness():
    assert parameter_level_proper(2)
    assert not parameter_level_proper(1)
    assert not parameter_level_proper(3)


def test_wfdf_builder_uses_spec_when_given():
    spec = default_wfdf_spec(1, theta="random", seed=3)
    assert WfdfBuilder().build(spec=spec) == build_wfdf(spec)


# cyclotomic base schemes

def test_cover_spec_validation():
    CoverSpec(4, 3).validate()
    assert CoverSpec(16, 5).n == 16
    with pytest.raises(DivisibilityError):
        CoverSpec(4, 2).validate()
    with pytest.raises(SpecInvalid):
        CoverSpec(5, 2).validate()
    assert CoverSpec.from_dict({"q": 8, "m": 7}) == CoverSpec(8, 7)


def test_base_scheme(base15):
    assert base15.order == 15
    assert base15.rank == 6
    assert base15.is_homogeneous()
    assert is_coherent_configuration(base15)[0]
    assert symmetrize(base15).rank == 5
    classes = e_classes(base15, 3)
    assert len(classes) == 5
    assert all(len(members) == 3 for members in classes)
    for i in range(3):
        c = base15.color_of(f"C{i}")
        assert base15.transpose[c] == base15.color_of(f"C{(-i) % 3}")
        s = base15.color_of(f"S{i}")
        assert base15.transpose[s] == s


def test_base_scheme_divisibility():
    with pytest.raises(DivisibilityError):
        build_cyclotomic_base(4, 2)


@pytest.mark.slow
def test_base_scheme_q16_m5():
    base = build_cyclotomic_base(16, 5)
    assert base.order == 85
    assert base.rank == 10


# switched schemes

def test_switched_scheme(j15):
    assert j15.order == 15
    assert j15.rank == 5
    assert j15.is_symmetric()
    assert set(j15.labels) == set(switched_labels(3))
    assert all(valencies(j15)[j15.color_of(f"T{i}")] == 4 for i in range(3))
    assert is_proper(j15).proper


def test_switched_scheme_tensor_matches_symmetrized_base(base15, j15):
    sym = symmetrize(base15)
    mapping = switched_label_map(j15, sym)
    _, switched_tensor = is_jordan_configuration(j15)
    _, base_tensor = is_jordan_configuration(sym)
    assert algebraically_isomorphic(switched_tensor, base_tensor, mapping)


def test_switching_fiber_choice_keeps_tensor(base15, j15):
    other = build_switched(base15, 3, 4, fiber_index=2)
    assert other != j15
    _, first = is_jordan_configuration(j15)
    _, second = is_jordan_configuration(other)
    mapping = {c: other.color_of(j15.label(c)) for c in range(j15.rank)}
    assert algebraically_isomorphic(first, second, mapping)


def test_switching_errors(base15, pentagon):
    with pytest.raises(BadFiberIndex):
        build_switched(base15, 3, 4, fiber_index=5)
    with pytest.raises(BaseInvalid):
        build_switched(pentagon, 3, 4)


@pytest.mark.slow
def test_switched_scheme_q16_m3():
    switched = build_switched(build_cyclotomic_base(16, 3), 3, 16)
    assert switched.order == 51
    assert switched.rank == 5


# fixtures

def test_thin_cyclic_schemes(pentagon):
    assert thin_cyclic_scheme(1).rank == 1
    assert is_coherent_configuration(thin_cyclic_scheme(7))[0]
    assert symmetrize(thin_cyclic_scheme(5)) == pentagon
    with pytest.raises(SpecInvalid):
        thin_cyclic_scheme(0)


def test_symmetric_group_scheme():
    scheme = symmetric_group_scheme(3)
    assert scheme.order == 6
    assert scheme.rank == 6
    assert is_coherent_configuration(scheme)[0]
    assert symmetrize(scheme).rank == 5


def test_example_rainbows():
    assert example_rainbow("pentagon").labels == ("1", "A", "B")
    with pytest.raises(SpecInvalid):
        example_rainbow("hexagon")


def test_blow_up(four_point):
    blown = blow_up(four_point, 2)
    assert blown.order == 8
    assert blown.rank == 5
    assert "twinX" in blown.labels
    assert is_jordan_configuration(blown)[0]
    assert blow_up(four_point, 1) == four_point


def test_enumeration_counts():
    assert len(list(iter_symmetric_homogeneous(3, 4))) == 1
    rainbows = list(iter_symmetric_homogeneous(4, 4))
    assert len(rainbows) == 5
    assert sorted(r.rank for r in rainbows) == [2, 3, 3, 3, 4]
    assert all(r.is_symmetric() and r.is_homogeneous() for r in rainbows)
    with pytest.raises(SpecInvalid):
        list(iter_symmetric_homogeneous(4, 5))


def test_enumeration_is_canonical():
    rainbows = list(iter_symmetric_homogeneous(5, 3))
    keys = {r.colors.tobytes() for r in rainbows}
    assert len(keys) == len(rainbows)
    assert np.all([r.rank <= 3 for r in rainbows])


def test_symmetric_jordan_schemes_are_regular_iff_homogeneous(pentagon, two_fibers):
    candidates = [blow_up(pentagon, 3), two_fibers]
    for n in range(3, 7):
        candidates += list(iter_symmetric_homogeneous(n, 4))
    checked = [r for r in candidates if r.is_symmetric() and is_jordan_configuration(r)[0]]
    assert any(not r.is_homogeneous() for r in checked)
    for rainbow in checked:
        regular = all(k is not None for k in valencies(rainbow))
        assert regular == rainbow.is_homogeneous()
