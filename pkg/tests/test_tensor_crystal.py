import itertools

import pytest

from gcwe.crystal_core import CrystalState, half
from gcwe.tensor_crystal import (
    Order,
    all_paths,
    component_of,
    components,
    couple,
    format_path,
    path_weight,
    sign_path,
    tensor_lower,
    tensor_raise,
)
from oracles import graph_components, sig_lower, sig_raise, spins_up_to

H = half("1/2")
SPIN_PAIRS = list(itertools.product(spins_up_to(3), repeat=2))


def _p(signs: str):
    return sign_path([H if c == "+" else -H for c in signs])


def test_two_factor_branch_rule():
    assert tensor_raise(_p("-+")) == _p("++")
    assert tensor_raise(_p("+-")) is None
    # +- spans the singlet, so it is killed both ways
    assert tensor_lower(_p("+-")) is None
    assert tensor_lower(_p("-+")) == _p("--")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_signature_rule_agrees_on_spin_half_products(n):
    for path in all_paths([H] * n):
        assert tensor_raise(path) == sig_raise(path), format_path(path)
        assert tensor_lower(path) == sig_lower(path), format_path(path)


@pytest.mark.parametrize("j1,j2", SPIN_PAIRS, ids=lambda j: str(j))
def test_signature_rule_agrees_on_two_factor_products(j1, j2):
    for path in all_paths([j1, j2]):
        assert tensor_raise(path) == sig_raise(path)
        assert tensor_lower(path) == sig_lower(path)


@pytest.mark.parametrize("j1,j2", SPIN_PAIRS, ids=lambda j: str(j))
def test_decomposition_each_J_once(j1, j2):
    groups = components([j1, j2])
    Js = sorted(c.J for c in groups)
    expected = [half(abs(j1 - j2)) + k for k in range((min(j1, j2).twice) + 1)]
    assert Js == expected
    for comp, members in groups.items():
        weights = [path_weight(p) for p in members]
        assert weights == [-comp.J + k for k in range(comp.J.twice + 1)]
        tops = [p for p in members if tensor_raise(p) is None]
        assert tops == [comp.highest_weight]


@pytest.mark.parametrize("j1,j2", SPIN_PAIRS, ids=lambda j: str(j))
def test_couple_matches_graph_oracle(j1, j2):
    oracle = graph_components([j1, j2])
    for (a, b), (J, m) in oracle.items():
        assert couple(a.j, a.m, b.j, b.m) == (J, m)


def test_codon_sized_product_has_expected_components():
    groups = components([H] * 3)
    sizes = sorted((format_path(c.highest_weight), len(m)) for c, m in groups.items())
    assert sizes == [("+++", 4), ("++-", 2), ("+-+", 2)]


def test_couple_worked_values():
    assert couple("3/2", "3/2", 1, -1) == (H, H)
    assert couple("1/2", "1/2", 1, -1) == (H, -H)
    assert couple(1, 0, 0, 0) == (1, 0)


def test_operator_first_swaps_factors():
    a, b = CrystalState(H, H), CrystalState(1, -1)
    assert couple(H, H, 1, -1, Order.OPERATOR_FIRST) == (component_of((b, a))[0].J, -H)
    assert couple(H, H, 1, -1, "operator-first")[1] == -H


def test_order_parse():
    assert Order.parse("state-first") is Order.STATE_FIRST
    with pytest.raises(ValueError):
        Order.parse("sideways")


def test_sign_path_validation():
    with pytest.raises(ValueError):
        sign_path([])
    with pytest.raises(ValueError):
        sign_path([H], [H, H])
