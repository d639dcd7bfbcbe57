from __future__ import annotations

from math import comb

import numpy as np
import pytest

from colorings.constructions import (THEOREM5_ORDERS, _palettes, _target_line, connected_coloring_best,
                                     extend_connected, label_lines, theorem3_coloring, theorem5_coloring)
from errors import TooSmall, UnsupportedOrder
from eval.bounds import theorem1_bound
from eval.verifier import check_complete, check_connected, check_lemma2_premise


def test_theorem3_q2(t3_q2, rep2):
    assert (t3_q2.n, t3_q2.k) == (7, 7)
    assert t3_q2.is_total()
    # every class is a triangle
    assert np.all(t3_q2.class_sizes() == 3)
    assert check_complete(t3_q2) == (True, None)
    assert check_connected(t3_q2) == (True, None)
    assert check_lemma2_premise(t3_q2, rep2, t3_q2.partition) == (True, None)


def test_theorem3_q3_paths(t3_q3):
    assert (t3_q3.n, t3_q3.k) == (13, 26)
    assert np.all(t3_q3.class_sizes() == 3)
    assert check_complete(t3_q3)[0]
    assert check_connected(t3_q3)[0]


@pytest.mark.parametrize("q", [4, 5, 7])
def test_theorem3_counts_and_checks(q):
    col = theorem3_coloring(q)
    n = q * q + q + 1
    assert col.n == n and col.k == -(-q // 2) * n
    assert col.is_total()
    assert np.all(col.class_sizes() == (q + 1 if q % 2 == 0 else q))
    assert check_complete(col)[0]
    assert check_connected(col)[0]


@pytest.mark.slow
def test_theorem3_q8():
    col = theorem3_coloring(8)
    assert (col.n, col.k) == (73, 292)
    assert check_complete(col)[0] and check_connected(col)[0]


@pytest.mark.parametrize("q", [1, 6, 12, 49])
def test_theorem3_rejects_unsupported_order(q):
    with pytest.raises(UnsupportedOrder):
        theorem3_coloring(q)


def test_theorem3_parallel_matches_serial(t3_q3):
    assert theorem3_coloring(3, n_jobs=2).color_of == t3_q3.color_of


def test_palettes_q2():
    sizes = [len(c) for c in _palettes(2).values()]
    assert sizes == [1, 1, 1, 1, 1, 2, 2]


@pytest.mark.parametrize("q", THEOREM5_ORDERS)
def test_palettes_cover_k(q):
    flat = [c for cls in _palettes(q).values() for c in cls]
    assert flat == list(range(1, q ** 3 + 2 * q - 3 + 1))


def test_target_lines_q4():
    # i <= q/2 hits L_q, i > q/2 hits L_{q+1}; two lines of the first pencil per target
    targets = [_target_line(4, i, j) for i in range(1, 4) for j in range(1, 5)]
    assert targets == [13, 13, 14, 14, 15, 15, 16, 16, 17, 17, 18, 18]


def test_label_lines(rep4):
    lab = label_lines(rep4)
    assert sorted(lab.line) == list(range(1, 22))
    assert sorted(lab.line.values()) == list(range(21))
    for i in range(1, 6):
        for j in range(1, 5):
            assert lab.v[i] in rep4.line_vertices[lab.line[4 * (i - 1) + j]]


def test_theorem5_q2(t5_q2, rep2):
    assert (t5_q2.n, t5_q2.k) == (7, 9)
    assert t5_q2.is_total()
    assert check_complete(t5_q2) == (True, None)
    assert check_lemma2_premise(t5_q2, rep2, t5_q2.partition) == (True, None)
    assert t5_q2.provenance["previous_bound"] == 10


def _class_size_identity(col, q):
    sizes = col.class_sizes()
    assert sizes[0] == q // 2 + 4
    assert np.all(sizes[1:] == q // 2 + 1)
    assert (q // 2 + 1) * col.k == comb(col.n, 2) - 3


def test_theorem5_q2_class_sizes(t5_q2):
    _class_size_identity(t5_q2, 2)


def test_theorem5_q4(t5_q4, rep4):
    assert (t5_q4.n, t5_q4.k) == (21, 69)
    assert check_complete(t5_q4) == (True, None)
    assert check_lemma2_premise(t5_q4, rep4, t5_q4.partition) == (True, None)
    _class_size_identity(t5_q4, 4)


@pytest.mark.slow
def test_theorem5_q8():
    col = theorem5_coloring(8)
    assert (col.n, col.k) == (73, 525)
    assert check_complete(col)[0]
    _class_size_identity(col, 8)


@pytest.mark.parametrize("q", [3, 5, 6, 32])
def test_theorem5_rejects_other_orders(q):
    with pytest.raises(UnsupportedOrder):
        theorem5_coloring(q)


def test_extend_connected_n12():
    col = connected_coloring_best(12)
    assert (col.n, col.k) == (12, 7)
    assert col.is_total()
    assert check_complete(col)[0] and check_connected(col)[0]


def test_extend_keeps_completeness(t5_q2):
    col = extend_connected(t5_q2, 10)
    assert col.k == 9 and col.is_total()
    assert check_complete(col)[0]


def test_connected_best_exact_fit(t3_q2):
    assert connected_coloring_best(7).color_of == t3_q2.color_of
    assert connected_coloring_best(13).k == 26


def test_connected_best_monotone_and_bounded():
    ks = [connected_coloring_best(n).k for n in range(7, 32)]
    assert ks == sorted(ks)
    for n, k in zip(range(8, 32), ks[1:]):
        assert k <= theorem1_bound(n)


def test_connected_best_too_small():
    with pytest.raises(TooSmall):
        connected_coloring_best(6)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_theorem3_count_below_upper_bound(q):
    n = q * q + q + 1
    assert -(-q // 2) * n <= theorem1_bound(n)
