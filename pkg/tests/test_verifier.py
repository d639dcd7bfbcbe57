from __future__ import annotations

import json
from dataclasses import replace
from itertools import combinations
from math import comb

import pytest

from colorings.constructions import ColorPartition, EdgeColoring, plane_representation
from errors import PartialColoringError
from eval.verifier import (VerifyConfig, check_complete, check_connected, check_lemma2_premise, is_owner,
                           owners_of, verify)
from run_utils import set_seed


def _coloring(n, k, color_of):
    return EdgeColoring(n=n, k=k, color_of=dict(color_of))


def _complete_by_pairs(col):
    """Reference: scan every pair of colors against every pair of adjacent edges."""
    met = set()
    for (e, c), (f, d) in combinations(col.color_of.items(), 2):
        if set(e) & set(f):
            met.add((min(c, d), max(c, d)))
    return all((c, d) in met for c, d in combinations(range(1, col.k + 1), 2))


RAINBOW_K3 = {(0, 1): 1, (0, 2): 2, (1, 2): 3}


def test_rainbow_k3_complete():
    assert check_complete(_coloring(3, 3, RAINBOW_K3)) == (True, None)


def test_four_colors_on_k3_fail():
    ok, witness = check_complete(_coloring(3, 4, RAINBOW_K3))
    assert not ok and witness == (1, 4)


def test_partial_coloring_rejected():
    with pytest.raises(PartialColoringError):
        check_complete(_coloring(3, 2, {(0, 1): 1, (0, 2): 2}))
    with pytest.raises(PartialColoringError):
        check_complete(_coloring(3, 2, {(0, 1): 1, (0, 2): 2, (1, 2): 5}))


def test_single_color_connected_and_complete():
    col = _coloring(6, 1, {e: 1 for e in combinations(range(6), 2)})
    assert check_complete(col) == (True, None)
    assert check_connected(col) == (True, None)


def test_disconnected_class_witness():
    color_of = {e: 2 for e in combinations(range(4), 2)}
    color_of[(0, 1)] = color_of[(2, 3)] = 1
    ok, witness = check_connected(_coloring(4, 2, color_of))
    assert not ok and witness == 1


def test_theorem3_q3_connected(t3_q3):
    assert check_connected(t3_q3) == (True, None)


def test_owners(t3_q2):
    for v in range(7):
        owned = owners_of(t3_q2, v)
        # three triangles through every vertex
        assert len(owned) == 3
    line_vertices = [x for x in range(7) if 1 in owners_of(t3_q2, x)]
    assert is_owner(t3_q2, line_vertices, {1})
    assert not is_owner(t3_q2, range(7), {1})


def test_isolated_vertex_does_not_own():
    col = _coloring(4, 2, {(0, 1): 1, (0, 2): 1, (0, 3): 2, (1, 2): 2, (1, 3): 2, (2, 3): 2})
    assert 1 not in owners_of(col, 3)


def test_lemma2_all_lines_own_t5(t5_q2, rep2):
    assert check_lemma2_premise(t5_q2, rep2, t5_q2.partition) == (True, None)
    for cls, line in zip(t5_q2.partition.classes, t5_q2.partition.owner_lines):
        assert is_owner(t5_q2, rep2.line_vertices[line], cls)


def test_lemma2_swapped_palettes(t3_q2, rep2):
    p = t3_q2.partition
    lines = list(p.owner_lines)
    lines[0], lines[1] = lines[1], lines[0]
    ok, witness = check_lemma2_premise(t3_q2, rep2, ColorPartition(p.classes, tuple(lines)))
    assert not ok
    line, vertex, color = witness
    assert line == lines[0] and color in p.classes[0]
    assert color not in owners_of(t3_q2, vertex)


def test_discrepancy_flagged(t3_q2, rep2):
    # an unused extra color: every line still owns its palette, yet color 8 meets nothing
    padded = replace(t3_q2, k=8)
    report = verify(padded, rep=rep2)
    assert report.lemma2_premise and not report.complete
    assert report.complete_witness == (1, 8)
    assert report.discrepancy is not None
    assert not report.passed()


def _ownership_verdicts(col, rep):
    p = col.partition
    rotated = ColorPartition(p.classes, p.owner_lines[1:] + p.owner_lines[:1])
    return check_lemma2_premise(col, rep, p)[0], check_lemma2_premise(col, rep, rotated)[0]


@pytest.mark.parametrize("name", ["t3_q2", "t3_q3", "t5_q2", "t5_q4"])
def test_relabeling_keeps_verdicts(name, request):
    col = request.getfixturevalue(name)
    rep = plane_representation(col.provenance["q"])
    base = (check_complete(col)[0], check_connected(col)[0], _ownership_verdicts(col, rep))
    assert base[2][0]
    rng = set_seed(7)
    for _ in range(20):
        perm_v = rng.permutation(col.n)
        perm_c = rng.permutation(col.k)
        rel = col.relabel(perm_v, perm_c)
        got = (check_complete(rel)[0], check_connected(rel)[0], _ownership_verdicts(rel, rep.relabel(perm_v)))
        assert got == base


@pytest.mark.parametrize("name", ["t3_q2", "t5_q2"])
def test_perturbation_consistent_with_recheck(name, request):
    col = request.getfixturevalue(name)
    rng = set_seed(11)
    edges = sorted(col.color_of)
    for _ in range(10):
        e, f = (edges[i] for i in rng.choice(len(edges), size=2, replace=False))
        color_of = dict(col.color_of)
        color_of[e], color_of[f] = color_of[f], color_of[e]
        pert = _coloring(col.n, col.k, color_of)
        ok, witness = check_complete(pert)
        assert ok == _complete_by_pairs(pert)
        if not ok:
            c, d = witness
            assert not (owners_of(pert, 0) >= {c, d})


def test_lemma2_implies_complete(t3_q2, t3_q3, t5_q2, t5_q4, rep2, rep3, rep4):
    for col, rep in ((t3_q2, rep2), (t3_q3, rep3), (t5_q2, rep2), (t5_q4, rep4)):
        if check_lemma2_premise(col, rep, col.partition)[0]:
            assert check_complete(col)[0]


def test_parallel_complete_matches(t5_q4):
    assert check_complete(t5_q4, n_jobs=2) == check_complete(t5_q4)


def test_report(t3_q2, rep2):
    report = verify(t3_q2, rep=rep2, config=VerifyConfig(require_connected=True))
    assert report.passed(require_connected=True)
    assert report.class_size_histogram == {3: 7}
    assert sum(s * c for s, c in report.class_size_histogram.items()) == comb(7, 2)
    d = json.loads(report.to_json())
    assert d["complete"] and d["connected"] and d["lemma2_premise"]
    assert "owners" not in d
    assert len(report.to_dict(include_owners=True)["owners"]) == 7
    assert any("PASS" in line for line in report.summary_lines())


def test_report_without_partition():
    report = verify(_coloring(3, 3, RAINBOW_K3))
    assert report.lemma2_premise is None
    assert report.passed(require_connected=True)
