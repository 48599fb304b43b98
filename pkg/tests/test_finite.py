import itertools
import math

import pytest
from hypothesis import given, strategies as st

from orderchains.finite import (
    MAX_ENUM,
    CapExceededError,
    FiniteChain,
    check_claim1,
    claim1_table,
    comparable,
    day_check,
    enumerate_max_chains,
    full,
    init_of_finite_order,
    insertable,
    is_chain,
    is_maximal_chain,
)


def brute_maximal(c: FiniteChain) -> bool:
    """Independent oracle: no subset outside c is comparable with all of c."""
    return not any(
        x not in c.sets and all(x & s in (x, s) for s in c.sets) for x in range(2 ** c.n)
    )


@pytest.mark.parametrize("n", range(6))
def test_counts_are_factorial(n):
    chains = enumerate_max_chains(n)
    assert len(chains) == math.factorial(n)
    assert len(set(chains)) == len(chains)
    for c in chains:
        assert len(c) == n + 1
        assert all(bin(b ^ a).count("1") == 1 for a, b in zip(c.sets, c.sets[1:]))


def test_enumeration_examples():
    assert enumerate_max_chains(1) == [FiniteChain(1, (0, 1))]
    assert len(enumerate_max_chains(3)) == 6


def test_cap():
    assert len(enumerate_max_chains(MAX_ENUM)) == 720
    with pytest.raises(CapExceededError):
        enumerate_max_chains(MAX_ENUM + 1)


def test_is_maximal_examples():
    assert is_maximal_chain(FiniteChain(2, (0, 0b1, 0b11)))
    c = FiniteChain(2, (0, 0b11))
    assert not is_maximal_chain(c)
    assert insertable(c) == [0b01, 0b10]


@pytest.mark.parametrize("n", range(5))
def test_sweep_matches_brute_force(n):
    for c in enumerate_max_chains(n):
        assert is_maximal_chain(c) and brute_maximal(c)
        assert check_claim1(c) and day_check(c)
        # dropping any member leaves a non-maximal chain
        for i in range(len(c.sets)):
            sub = FiniteChain(n, c.sets[:i] + c.sets[i + 1:])
            assert not is_maximal_chain(sub) and not brute_maximal(sub)


def test_init_of_finite_order():
    assert init_of_finite_order((1, 0)).sets == (0, 0b10, 0b11)
    assert init_of_finite_order(range(3)).sets == (0, 1, 3, 7)
    with pytest.raises(ValueError):
        init_of_finite_order((0, 0))
    for n in range(6):
        inits = {init_of_finite_order(p) for p in itertools.permutations(range(n))}
        assert inits == set(enumerate_max_chains(n))


def test_segment_identity_examples():
    bad = FiniteChain(2, (0, 0b11))
    assert claim1_table(bad)[0] == (0, 0b11)
    assert not check_claim1(bad)
    assert check_claim1(FiniteChain(1, (0, 1)))
    # B_alpha = A_alpha ∪ {alpha} on a concrete chain
    c = init_of_finite_order((2, 0, 1))
    assert claim1_table(c) == {2: (0, 0b100), 0: (0b100, 0b101), 1: (0b101, 0b111)}


def test_day_examples():
    assert all(day_check(c) for c in enumerate_max_chains(3))
    assert not day_check(FiniteChain(2, (0b1, 0b11)))
    assert not day_check(FiniteChain(2, (0, 0b1)))
    assert day_check(FiniteChain(0, (0,)))


def test_finite_chain_validation_and_hex():
    with pytest.raises(ValueError):
        FiniteChain(2, (0b11, 0b1))
    with pytest.raises(ValueError):
        FiniteChain(2, (0, 0b100))
    c = FiniteChain.of(3, {0b111, 0, 0b10})
    assert c.sets == (0, 0b10, 0b111)
    assert FiniteChain.from_hex(3, c.to_hex()) == c
    assert c.to_hex() == ["0", "2", "7"]


@given(st.permutations(range(6)), st.integers(1, 5))
def test_partial_chains_are_not_maximal(perm, k):
    c = init_of_finite_order(perm)
    sub = FiniteChain(6, c.sets[:k] + c.sets[k + 1:])
    assert is_chain(sub.sets)
    assert not is_maximal_chain(sub)
    assert c.sets[k] in insertable(sub)


def test_large_ground_set_uses_step_rule():
    n = 20
    c = init_of_finite_order(range(n))
    assert is_maximal_chain(c)
    assert not is_maximal_chain(FiniteChain(n, c.sets[:5] + c.sets[6:]))
    assert comparable(0b1, 0b11) and not comparable(0b01, 0b10)
    assert full(4) == 0b1111
