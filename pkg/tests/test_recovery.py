# Unit tests for recovering activity counts and the Tutte polynomial from a Hilbert function

import pytest

from src.forest_hilbert.corpus import builtin_corpus
from src.forest_hilbert.errors import RecoveryError
from src.forest_hilbert.forests import HilbertFunction, activity_table, hilbert_from_forests
from src.forest_hilbert.recovery import (
    RECOVERED,
    infer_edge_count,
    recover_activity_counts,
    recover_tutte,
    recovered_table,
)
from src.forest_hilbert.tutte import tutte


def test_infer_edge_count(single_edge, triangle):
    """Test that the top nonzero degree divided by t gives e."""
    assert infer_edge_count(hilbert_from_forests(single_edge, 2), 2) == 1
    assert infer_edge_count(hilbert_from_forests(triangle, 3), 3) == 3
    assert infer_edge_count(HilbertFunction(t=5, dims=(1,)), 5) == 0


def test_infer_edge_count_errors():
    """Test that zero functions and misaligned tops are rejected."""
    with pytest.raises(RecoveryError):
        infer_edge_count(HilbertFunction(t=2, dims=(0, 0, 0)), 2)
    with pytest.raises(RecoveryError):
        infer_edge_count(HilbertFunction(t=2, dims=(1, 1, 1, 1)), 2)


def test_recover_counts_single_edge():
    """Test that [1, 1, 1] at t = 2 is one empty forest and one single edge."""
    counts = recover_activity_counts(HilbertFunction(t=2, dims=(1, 1, 1)), 2)
    assert counts == {(0, 0): 1, (1, 0): 1}


def test_recover_counts_triangle(triangle):
    """Test that the triangle table comes back at t = 3."""
    counts = recover_activity_counts(hilbert_from_forests(triangle, 3), 3)
    assert counts == dict(activity_table(triangle).counts)


@pytest.mark.parametrize(
    "dims,t,n,expected",
    [
        ((1, 1, 1), 2, 2, "x"),
        ((1,), 5, 1, "1"),
    ],
)
def test_recover_tutte_small(dims, t, n, expected):
    """Test recovery from literal dimension vectors."""
    tp = recover_tutte(HilbertFunction(t=t, dims=dims), t, n)
    assert str(tp) == expected
    assert tp.provenance == RECOVERED


def test_recover_triangle_and_path(triangle, path3):
    """Test recovery of the triangle and the path at t = 3."""
    assert str(recover_tutte(hilbert_from_forests(triangle, 3), 3, 3)) == "x^2 + x + y"
    assert str(recover_tutte(hilbert_from_forests(path3, 3), 3, 3)) == "x^2"


def test_recover_corpus():
    """Test recovery at t = n and t = n + 1 for every connected loop-free corpus graph."""
    recoverable = [item for item in builtin_corpus() if item.recoverable]
    assert {item.name for item in recoverable} >= {"triangle", "k4", "c4", "triple_edge"}
    for item in recoverable:
        g = item.graph
        for t in (g.v, g.v + 1):
            assert recover_tutte(hilbert_from_forests(g, t), t, g.v) == tutte(g), (item.name, t)


def test_negative_residual():
    """Test that a vector that is not a Hilbert function fails with a degree."""
    with pytest.raises(RecoveryError) as exc:
        recover_activity_counts(HilbertFunction(t=2, dims=(1, 3, 1)), 2)
    assert "negative" in str(exc.value)
    assert exc.value.degree is not None


def test_negative_dimension():
    """Test that negative input dimensions are refused."""
    with pytest.raises(RecoveryError):
        recover_activity_counts(HilbertFunction(t=1, dims=(1, -1, 1)), 1)


def test_t_below_n(triangle):
    """Test that t < n is refused."""
    with pytest.raises(RecoveryError):
        recovered_table(hilbert_from_forests(triangle, 2), 2, 3)


def test_wrong_vertex_count(triangle):
    """Test that forests too large for n vertices are reported."""
    with pytest.raises(RecoveryError):
        recovered_table(hilbert_from_forests(triangle, 3), 3, 2)


def test_recovered_table_shape(k4):
    """Test the recovered table of K4 at t = 5."""
    table = recovered_table(hilbert_from_forests(k4, 5), 5, 4)
    assert (table.v, table.e, table.c) == (4, 6, 1)
    assert table.total() == 38
