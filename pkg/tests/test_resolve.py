import pytest

from adamschart.fpmodule import FPModule, parse_module, preset_module
from adamschart.resolve import (
    check_d_squared,
    check_exact,
    check_minimal,
    ext_dims,
    ext_table,
    minimal_resolution,
)
from adamschart.steenrod import A, A1
from oracles import cobar_ext


def stem_grid(table, s_max, n_max):
    return {(s, n): table.get(s, s + n) for s in range(s_max + 1) for n in range(n_max + 1) if table.get(s, s + n)}


def test_zero_module():
    res = minimal_resolution(FPModule(A1, ()), 3, 10)
    assert all(not d.source.degrees for d in res.stages)
    assert ext_table(res).total() == 0


@pytest.mark.parametrize("name", ["free/A", "free/A(1)"])
def test_free_module_is_its_own_resolution(name):
    res = minimal_resolution(preset_module(name), 4, 12)
    assert res.generator_degrees(0) == (0,)
    assert all(not res.generator_degrees(s) for s in range(1, 5))


def test_sphere_over_a1_low_range():
    e = ext_dims(preset_module("sphere/A(1)"), 8, 21)
    for s in range(9):
        assert e.get(s, s) == 1
    assert e.get(1, 2) == 1 and e.get(2, 4) == 1
    assert all(e.get(s, s + 3) == 0 for s in range(9))
    assert e.get(3, 7) == 1 and all(e.get(s, s + 4) == 1 for s in range(3, 9))
    assert e.get(4, 12) == 1 and e.get(5, 14) == 1 and e.get(6, 16) == 1
    assert e.get(7, 19) == 1 and e.get(8, 20) == 1


def test_sphere_over_a_against_cobar():
    e = ext_dims(preset_module("sphere/A"), 4, 10)
    for s in range(5):
        for n in range(7):
            assert e.get(s, s + n) == cobar_ext(s, s + n), (s, n)
    expected = {(0, 0): 1, (1, 0): 1, (2, 0): 1, (3, 0): 1, (4, 0): 1, (1, 1): 1, (2, 2): 1,
                (1, 3): 1, (2, 3): 1, (3, 3): 1, (2, 6): 1}
    assert stem_grid(e, 4, 6) == expected


def test_change_of_rings():
    over_a = ext_dims(preset_module("ko-as-A-module"), 3, 9)
    over_a1 = ext_dims(preset_module("sphere/A(1)"), 3, 9)
    assert stem_grid(over_a, 3, 6) == stem_grid(over_a1, 3, 6)


@pytest.mark.parametrize(
    "name,s_max,t_max",
    [("sphere/A(1)", 8, 21), ("sphere/A", 8, 12), ("ko-as-A-module", 3, 10)],
)
def test_structural_invariants(name, s_max, t_max):
    res = minimal_resolution(preset_module(name), s_max, t_max)
    assert check_d_squared(res) == []
    assert check_minimal(res)
    assert check_exact(res) == []
    m = res.module
    for t in range(res.euler_window() + 1):
        assert res.euler_sum(t) == m.dim(t), t
    # past the window the defect is exactly the part of F_{s_max+1} not yet built
    for t in range(res.t_max + 1):
        assert res.euler_sum(t) == m.dim(t) + (-1) ** s_max * res.top_kernel[t]


def test_module_with_two_generators():
    m = parse_module("algebra A(1)\ngen a 0\ngen b 1\nrel Sq(1)*a + b\nrel b\nrel Sq(2)*a\n")
    res = minimal_resolution(m, 4, 12)
    # b is redundant, so the module is the sphere over A(1)
    assert res.generator_degrees(0) == (0,)
    assert ext_table(res).dims == ext_dims(preset_module("sphere/A(1)"), 4, 12).dims
    assert check_d_squared(res) == [] and check_exact(res) == []


def test_determinism():
    a = minimal_resolution(preset_module("sphere/A"), 5, 12)
    b = minimal_resolution(preset_module("sphere/A"), 5, 12)
    assert a.dump() == b.dump()
    for s in range(6):
        for t in range(13):
            assert a.d_matrix(s, t) == b.d_matrix(s, t)


def test_dump_format():
    res = minimal_resolution(preset_module("sphere/A(1)"), 1, 2)
    assert res.dump() == (
        "gen s=0 t=0 idx=0\n"
        "diff s=0 idx=0 -> 1*i\n"
        "gen s=1 t=1 idx=0\n"
        "diff s=1 idx=0 -> Sq(1)*g0_0\n"
        "gen s=1 t=2 idx=1\n"
        "diff s=1 idx=1 -> Sq(2)*g0_0\n"
    )


def test_truncation_flags():
    e = ext_dims(preset_module("sphere/A(1)"), 2, 5, guard=2)
    assert e.trusted(2, 3) and not e.trusted(2, 4) and not e.trusted(3, 0)


def test_negative_bounds_rejected():
    with pytest.raises(ValueError):
        minimal_resolution(preset_module("sphere/A"), -1, 3)
