from __future__ import annotations

import pytest

from colorings.factorizations import (all_edges, hamiltonian_decompose, is_perfect_matching, one_factorize,
                                      one_factorize_containing)
from errors import EvenOrder, NotPerfectMatching, OddOrder


def test_one_factorize_m2():
    assert one_factorize(2).factors == (((0, 1),),)


def test_one_factorize_m4():
    fac = one_factorize(4)
    assert set(fac.factors) == {((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))}


@pytest.mark.parametrize("m", [2, 4, 6, 8, 10, 18])
def test_one_factorize_valid(m):
    fac = one_factorize(m)
    assert len(fac.factors) == m - 1
    assert fac.is_valid()
    assert sorted(e for f in fac.factors for e in f) == all_edges(m)


@pytest.mark.parametrize("m", [1, 3, 7])
def test_one_factorize_odd(m):
    with pytest.raises(OddOrder):
        one_factorize(m)


def test_hamiltonian_m3():
    assert hamiltonian_decompose(3).cycles == ((0, 1, 2),)


@pytest.mark.parametrize("m", [3, 5, 7, 9, 17])
def test_hamiltonian_valid(m):
    dec = hamiltonian_decompose(m)
    assert len(dec.cycles) == (m - 1) // 2
    assert all(len(c) == m for c in dec.cycles)
    assert dec.is_valid()


@pytest.mark.parametrize("m", [2, 4, 8])
def test_hamiltonian_even(m):
    with pytest.raises(EvenOrder):
        hamiltonian_decompose(m)


def test_containing_m4():
    fac = one_factorize_containing(4, [(0, 3), (1, 2)])
    assert fac.factors[0] == ((0, 3), (1, 2))
    assert fac.is_valid()


def test_containing_m6():
    M = ((0, 1), (2, 3), (4, 5))
    fac = one_factorize_containing(6, M)
    assert len(fac.factors) == 5
    assert M in fac.factors
    assert fac.is_valid()


def test_containing_unsorted_input():
    fac = one_factorize_containing(6, [(5, 0), (3, 1), (4, 2)])
    assert fac.factors[0] == ((0, 5), (1, 3), (2, 4))
    assert fac.is_valid()


def test_containing_rejects_non_matching():
    with pytest.raises(NotPerfectMatching):
        one_factorize_containing(4, [(0, 1), (1, 2)])


def test_is_perfect_matching():
    assert is_perfect_matching(4, [(0, 1), (2, 3)])
    assert not is_perfect_matching(4, [(0, 1), (1, 2)])
    assert not is_perfect_matching(4, [(0, 1)])
