import pytest

from coverlemma import StateRelation, nn1_labelling, squash_labelling
from coverlemma.labelling import Labelling


def test_squash_figure_example():
    # theta^-1(y) = {4,5,2}, theta^-1(yt) = {5,1}; y=1, yt=2 on five states
    theta = StateRelation({1: [2], 2: [1], 4: [1], 5: [1, 2], 3: [3]}, 5, 3)
    w = squash_labelling(theta)
    assert [w.encode(1, x) for x in (2, 4, 5)] == [1, 2, 3]
    assert w.decode(2, 1) == 1
    assert w.decode(2, 2) == 5
    assert w.bottom_size == 3


def test_squash_partition_class():
    theta = StateRelation.from_lists(
        [[1], [1], [2], [2], [2], [1], [1], [2], [3], [1], [4], [4], [4]]
    )
    w = squash_labelling(theta)
    assert {x: w.encode(1, x) for x in (1, 2, 6, 7, 10)} == {1: 1, 2: 2, 6: 3, 7: 4, 10: 5}
    assert w.bottom_size == 5


def test_squash_full_preimage_is_identity():
    w = squash_labelling(StateRelation({x: [1] for x in range(1, 6)}, 5, 1))
    assert [w.encode(1, x) for x in range(1, 6)] == [1, 2, 3, 4, 5]


def test_nn1_examples():
    w = nn1_labelling(3)
    assert w.encode(2, 1) == 1 and w.encode(2, 3) == 2
    w5 = nn1_labelling(5)
    assert all(w5.encode(1, x) == x - 1 for x in range(2, 6))
    assert w5.bottom_size == 4
    with pytest.raises(ValueError):
        nn1_labelling(1)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_nn1_agrees_with_squashing(n):
    theta = StateRelation({x: [y for y in range(1, n + 1) if y != x] for x in range(1, n + 1)}, n, n)
    squashed = squash_labelling(theta)
    special = nn1_labelling(n)
    for y in range(1, n + 1):
        for x in range(1, n + 1):
            if x != y:
                assert special.encode(y, x) == squashed.encode(y, x)
    assert special == squashed


def test_labelling_invariants():
    theta = StateRelation({1: [1, 2], 2: [2], 3: [1, 3], 4: [3], 5: [2, 3]}, 5, 3)
    w = squash_labelling(theta)
    inv = theta.inverse()
    assert w.bottom_size == max(len(inv(y)) for y in inv.domain)
    for y in w.top_states:
        wy, wyi = w.w(y), w.w_inverse(y)
        assert wy.is_injective()
        assert wy.domain == inv(y)
        # contiguous labels 1..k
        assert wy.image == tuple(range(1, len(inv(y)) + 1))
        assert all((wy * wyi)(x) == x for x in inv(y))
        assert all((wyi * wy)(z) == z for z in range(1, len(inv(y)) + 1))


def test_decode_errors():
    w = squash_labelling(StateRelation.from_lists([[1], [1], [2]]))
    with pytest.raises(ValueError):
        w.decode(2, 2)
    with pytest.raises(ValueError):
        w.encode(2, 1)
    with pytest.raises(ValueError):
        Labelling({1: [1, 1]}, 2)
