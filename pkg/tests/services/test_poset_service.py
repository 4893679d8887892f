import random
from itertools import combinations, permutations
from math import factorial

import pytest

from app.core.exceptions import CyclicInput, OutOfRange, ReflexiveInput
from app.models.poset import Poset
from app.services.generation import generate_all
from app.services.poset_service import (
    count_linear_extensions,
    hasse_diagram,
    ideal_masks,
    is_graded,
    is_narrow,
    linear_extensions,
    maximal_chain_lengths,
    order_ideals,
    poset_from_relations,
    transitive_closure,
)
from tests.conftest import labeled_posets


def test_transitive_closure_relabels_to_natural_order() -> None:
    # 3 < 1, given with 0-based rows.
    rel = [[False] * 3 for _ in range(3)]
    rel[2][0] = True

    poset = transitive_closure(rel)

    assert poset.down == (0, 0b001, 0)
    assert poset.less(0, 1)


def test_transitive_closure_adds_implied_relations() -> None:
    poset = poset_from_relations(4, [(1, 2), (2, 3), (3, 4)])

    assert poset == Poset.chain(4)


def test_naturally_labeled_input_keeps_its_labels(v_poset: Poset) -> None:
    assert poset_from_relations(3, v_poset.relations()) == v_poset


def test_cycle_is_rejected_with_its_elements() -> None:
    with pytest.raises(CyclicInput) as exc_info:
        poset_from_relations(3, [(1, 2), (2, 3), (3, 1)])

    assert exc_info.value.details == {"cycle": [1, 2, 3]}


def test_reflexive_pair_is_rejected() -> None:
    with pytest.raises(ReflexiveInput):
        poset_from_relations(2, [(2, 2)])


def test_pairs_outside_ground_set_are_rejected() -> None:
    with pytest.raises(OutOfRange):
        poset_from_relations(2, [(1, 3)])


def test_linear_extensions_in_lexicographic_order(v_poset: Poset) -> None:
    assert list(linear_extensions(v_poset)) == [(0, 1, 2), (1, 0, 2)]
    assert len(list(linear_extensions(Poset.antichain(4)))) == factorial(4)
    assert list(linear_extensions(Poset.chain(4))) == [(0, 1, 2, 3)]


def test_count_linear_extensions_matches_enumeration() -> None:
    for poset in labeled_posets(4):
        assert count_linear_extensions(poset) == len(list(linear_extensions(poset)))


def test_order_ideals_of_v_poset(v_poset: Poset) -> None:
    lattice = order_ideals(v_poset)

    assert lattice.ideals == (0, 0b001, 0b010, 0b011, 0b111)
    assert lattice.supersets[0] == (0, 1, 2, 3, 4)
    assert lattice.supersets[1] == (1, 3, 4)
    assert 0b100 not in lattice
    assert lattice.members(lattice.index_of(0b011)) == frozenset({0, 1})


def test_chain_has_one_ideal_per_prefix() -> None:
    assert len(ideal_masks(Poset.chain(5).down)) == 6
    assert len(ideal_masks(Poset.antichain(5).down)) == 32


def test_narrow_means_no_three_element_antichain(v_poset: Poset) -> None:
    assert is_narrow(v_poset)
    assert is_narrow(Poset.chain(5))
    assert is_narrow(Poset.antichain(2))
    assert not is_narrow(Poset.antichain(3))
    # Two disjoint 2-chains: width two.
    assert is_narrow(poset_from_relations(4, [(1, 2), (3, 4)]))
    # A 2-chain beside two isolated points: width three.
    assert not is_narrow(poset_from_relations(4, [(1, 2)]))


def test_graded_means_equal_maximal_chains(v_poset: Poset) -> None:
    assert is_graded(v_poset)
    assert is_graded(Poset.antichain(3))
    assert not is_graded(poset_from_relations(4, [(1, 2), (2, 3)]))
    assert maximal_chain_lengths(Poset.chain(4)) == {3}
    assert maximal_chain_lengths(poset_from_relations(4, [(1, 2), (2, 3)])) == {0, 2}


def test_hasse_diagram_lists_covers(v_poset: Poset) -> None:
    assert hasse_diagram(v_poset) == "1 < 3\n2 < 3"
    assert hasse_diagram(Poset.chain(3)) == "1 < 2\n2 < 3"


def brute_force_extension_count(poset: Poset) -> int:
    pairs = [(i, j) for i in range(poset.p) for j in range(poset.p) if poset.less(i, j)]
    total = 0
    for word in permutations(range(poset.p)):
        position = {v: k for k, v in enumerate(word)}
        total += all(position[i] < position[j] for i, j in pairs)
    return total


def brute_force_down_set_count(poset: Poset) -> int:
    pairs = [(i, j) for i in range(poset.p) for j in range(poset.p) if poset.less(i, j)]
    total = 0
    for size in range(poset.p + 1):
        for chosen in combinations(range(poset.p), size):
            members = set(chosen)
            total += all(i in members for i, j in pairs if j in members)
    return total


def has_three_element_antichain(poset: Poset) -> bool:
    return any(
        not (poset.comparable(a, b) or poset.comparable(a, c) or poset.comparable(b, c))
        for a, b, c in combinations(range(poset.p), 3)
    )


def random_relation_poset(p: int, rng: random.Random) -> Poset:
    pairs = [(i, j) for i, j in combinations(range(1, p + 1), 2) if rng.random() < 0.2]
    return poset_from_relations(p, pairs)


@pytest.mark.parametrize("p", [1, 2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_extension_count_matches_permutation_count(p: int) -> None:
    for poset in generate_all(p):
        assert count_linear_extensions(poset) == brute_force_extension_count(poset)


@pytest.mark.parametrize("p", [1, 2, 3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
def test_ideal_count_matches_subset_count(p: int) -> None:
    for poset in generate_all(p):
        expected = brute_force_down_set_count(poset)
        assert len(ideal_masks(poset.down)) == expected
        assert len(order_ideals(poset).ideals) == expected


@pytest.mark.slow
def test_ideal_count_matches_subset_count_on_random_posets() -> None:
    rng = random.Random(2045)
    for p in (8, 9, 10):
        for _ in range(40):
            poset = random_relation_poset(p, rng)
            assert len(ideal_masks(poset.down)) == brute_force_down_set_count(poset)


@pytest.mark.parametrize(
    "p",
    [1, 2, 3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow), pytest.param(8, marks=pytest.mark.slow)],
)
def test_narrow_matches_antichain_search(p: int) -> None:
    for poset in generate_all(p):
        assert is_narrow(poset) == (not has_three_element_antichain(poset))
