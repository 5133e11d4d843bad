#!/usr/bin/env python3
"""
Test script for quasilocal cohomology
Tests basis enumeration, the differential matrices and the cohomology dimensions
"""

import sys

import pytest

from repository.exceptions import ArgumentError
from repository.linalg import exact_rank
from repository.operations import quasilocality_radius
from repository.qloc import (
    breakdown_cutoff,
    cohomology_dims,
    d_squared_check,
    differential_matrix,
    expected_dims,
    qloc_basis,
)


def test_basis_counts_radius_zero():
    assert len(qloc_basis(4, 1, 1, 0, 0)) == 8
    assert len(qloc_basis(4, 1, 1, 0, 1)) == 8
    # g -> f always has distance 1
    assert len(qloc_basis(4, 1, 1, 0, -1)) == 0


def test_degree_out_of_range_is_empty():
    assert len(qloc_basis(6, 1, 1, 1, 2)) == 0
    assert len(qloc_basis(6, 2, 1, 1, -3)) == 0


def test_bad_arguments():
    with pytest.raises(ArgumentError):
        qloc_basis(6, 0, 1, 1, 0)
    with pytest.raises(ArgumentError):
        qloc_basis(6, 1, 1, -1, 0)


def test_basis_respects_radius():
    space = qloc_basis(8, 2, 1, 1, 0)
    assert len(space) > 0
    assert all(quasilocality_radius(op).within(1) for op in space.operations())
    assert all(op.degree == 0 for op in space.operations())
    assert len(set(space.basis)) == len(space)


def test_differential_matrix_shape():
    source = qloc_basis(8, 1, 1, 1, 0)
    target = qloc_basis(8, 1, 1, 1, 1)
    rows = differential_matrix(source, target)
    assert len(rows) == len(source)
    assert all(col < len(target) for row in rows for col in row)
    with pytest.raises(ArgumentError):
        differential_matrix(source, source)


def test_exact_rank_small():
    assert exact_rank([{0: 1, 1: 2}, {0: 2, 1: 4}, {1: 1}]) == 2
    assert exact_rank([]) == 0


def test_expected_dims():
    assert expected_dims(1, 2) == {-1: 0, 0: 0, 1: 1, 2: 1}


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_d_squared(m, n):
    for p in range(-m, n):
        assert d_squared_check(8, m, n, 1, p)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_cohomology_matches_circle(m, n):
    assert cohomology_dims(12, m, n, 1) == expected_dims(m, n)


@pytest.mark.slow
@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_cohomology_stable_at_radius_two(m, n):
    assert cohomology_dims(12, m, n, 2) == expected_dims(m, n)


@pytest.mark.slow
def test_cohomology_two_to_two():
    assert cohomology_dims(12, 2, 2, 1) == expected_dims(2, 2)


def test_breakdown_is_observed():
    cutoff = breakdown_cutoff(6, 1, 1)
    assert cutoff is not None
    assert 1 <= cutoff <= 6


def main():
    print("🧪 Testing quasilocal cohomology")
    print("=" * 50)
    failed = 0
    cases = {
        "test_d_squared": [(1, 1), (2, 1), (1, 2)],
        "test_cohomology_matches_circle": [(1, 1), (2, 1), (1, 2)],
    }
    for name, fn in list(globals().items()):
        if not (name.startswith("test_") and callable(fn)) or name.startswith("test_cohomology_stable"):
            continue
        if name == "test_cohomology_two_to_two":
            continue
        for args in cases.get(name, [()]):
            try:
                fn(*args)
                print(f"✅ {name}{args if args else ''}")
            except Exception as e:
                failed += 1
                print(f"❌ {name}{args if args else ''}: {e}")
    return failed == 0


if __name__ == "__main__":
    sys.exit(0 if main() else 1)
