#!/usr/bin/env python3
"""
Test script for the graded core
Tests permutations, their signs and the Koszul rule
"""

import itertools
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repository.exceptions import ArgumentError
from repository.graded import Permutation, all_permutations, as_rat, koszul_sign


@st.composite
def permutations(draw, size=None):
    k = draw(st.integers(min_value=1, max_value=6)) if size is None else size
    return Permutation(draw(st.permutations(range(k))))


@st.composite
def permutation_pair_with_degrees(draw):
    k = draw(st.integers(min_value=1, max_value=6))
    sigma = draw(permutations(size=k))
    tau = draw(permutations(size=k))
    degrees = draw(st.lists(st.integers(min_value=0, max_value=3), min_size=k, max_size=k))
    return sigma, tau, degrees


def test_as_rat_is_exact():
    assert as_rat("1/12") == Fraction(1, 12)
    assert as_rat(3) == Fraction(3)
    with pytest.raises(ArgumentError):
        as_rat(0.5)


def test_apply_moves_factor_to_image():
    sigma = Permutation([2, 0, 1])
    assert sigma.apply(["a", "b", "c"]) == ("b", "c", "a")


def test_rejects_non_bijection():
    with pytest.raises(ArgumentError):
        Permutation([0, 0, 1])


def test_cycle_and_sign():
    c = Permutation.cycle(3)
    assert c.images == (1, 2, 0)
    assert c.sign() == 1
    assert c.compose(c).compose(c) == Permutation.identity(3)
    assert Permutation.transposition(4, 1, 3).sign() == -1


def test_koszul_sign_examples():
    swap = Permutation([1, 0])
    assert koszul_sign(swap, [1, 1]) == -1
    assert koszul_sign(swap, [1, 0]) == 1
    assert koszul_sign(swap, [0, 0]) == 1
    # cycling three odd factors is an even permutation of odd things
    assert koszul_sign(Permutation.cycle(3), [1, 1, 1]) == 1
    # (v1, v2, v3) -> (v2, v3, v1): v1 crosses the odd v2 and the even v3
    rotate = Permutation([2, 0, 1])
    assert rotate.apply(["v1", "v2", "v3"]) == ("v2", "v3", "v1")
    assert koszul_sign(rotate, [1, 1, 0]) == -1


@pytest.mark.parametrize("k", [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_koszul_sign_multiplicative_exhaustive(k):
    perms = list(all_permutations(k))
    for degrees in itertools.product((0, 1), repeat=k):
        for tau in perms:
            moved = tau.apply(degrees)
            first = koszul_sign(tau, degrees)
            for sigma in perms:
                assert koszul_sign(sigma.compose(tau), degrees) == first * koszul_sign(sigma, moved)


def test_koszul_sign_length_mismatch():
    with pytest.raises(ArgumentError):
        koszul_sign(Permutation.identity(2), [1])


def test_all_permutations_count():
    assert len(set(all_permutations(4))) == 24


@settings(max_examples=500, derandomize=True)
@given(permutation_pair_with_degrees())
def test_koszul_sign_is_multiplicative(case):
    sigma, tau, degrees = case
    whole = koszul_sign(sigma.compose(tau), degrees)
    staged = koszul_sign(tau, degrees) * koszul_sign(sigma, tau.apply(degrees))
    assert whole == staged


@settings(max_examples=200, derandomize=True)
@given(permutations())
def test_inverse_undoes_apply(sigma):
    items = list(range(sigma.size))
    assert sigma.inverse().apply(sigma.apply(items)) == tuple(items)
    assert sigma.compose(sigma.inverse()) == Permutation.identity(sigma.size)


@settings(max_examples=200, derandomize=True)
@given(permutations())
def test_even_degrees_never_sign(sigma):
    assert koszul_sign(sigma, [0] * sigma.size) == 1
    assert koszul_sign(sigma, [1] * sigma.size) == sigma.sign()


def main():
    print("🧪 Testing graded core")
    print("=" * 50)
    failed = 0
    for name, fn in list(globals().items()):
        if not (name.startswith("test_") and callable(fn)):
            continue
        for args in ([(k,) for k in range(1, 6)] if name == "test_koszul_sign_multiplicative_exhaustive" else [()]):
            try:
                fn(*args)
                print(f"✅ {name}{args if args else ''}")
            except Exception as e:
                failed += 1
                print(f"❌ {name}{args if args else ''}: {e}")
    return failed == 0


if __name__ == "__main__":
    sys.exit(0 if main() else 1)
