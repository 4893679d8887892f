import pytest

from app.core.exceptions import InvalidPoset, NegativeEntry, OutOfRange
from app.models.hstar import HStarVector
from app.models.poset import Poset, iter_bits


def test_iter_bits_lists_set_positions() -> None:
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert list(iter_bits(0)) == []


def test_chain_and_antichain_shapes() -> None:
    chain = Poset.chain(4)
    antichain = Poset.antichain(4)

    assert chain.relations() == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]
    assert chain.minimal_elements() == [0]
    assert chain.maximal_elements() == [3]
    assert antichain.relations() == []
    assert antichain.minimal_elements() == antichain.maximal_elements() == [0, 1, 2, 3]


def test_covers_exclude_transitive_shortcuts() -> None:
    chain = Poset.chain(3)

    assert chain.covers(0, 1)
    assert chain.covers(1, 2)
    assert not chain.covers(0, 2)
    assert chain.less(0, 2)
    assert chain.lower_covers(2) == 0b010


def test_relation_matrix_of_v_poset(v_poset: Poset) -> None:
    assert v_poset.relation_matrix() == (
        (False, False, True),
        (False, False, True),
        (False, False, False),
    )
    assert not v_poset.comparable(0, 1)
    assert v_poset.comparable(2, 0)


def test_rejects_labels_that_are_not_natural() -> None:
    with pytest.raises(InvalidPoset):
        Poset(down=(0b10, 0))


def test_rejects_relation_that_is_not_closed() -> None:
    # 1 < 2 < 3 without 1 < 3.
    with pytest.raises(InvalidPoset) as exc_info:
        Poset(down=(0, 0b001, 0b010))
    assert exc_info.value.details == {"element": 3}


@pytest.mark.parametrize("p", [0, 17])
def test_rejects_sizes_out_of_range(p: int) -> None:
    with pytest.raises(OutOfRange):
        Poset(down=(0,) * p)


def test_hstar_vector_truncates_trailing_zeros() -> None:
    vector = HStarVector((1, 4, 1, 0))

    assert vector.top_index == 2
    assert vector.truncated() == (1, 4, 1)
    assert vector.total == 6
    assert vector.as_polynomial().degree == 2


def test_hstar_vector_rejects_negative_entries() -> None:
    with pytest.raises(NegativeEntry) as exc_info:
        HStarVector((1, -1))
    assert exc_info.value.exit_code == 3
