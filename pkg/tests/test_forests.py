# Unit tests for subforest enumeration, external activity, and the forest-side Hilbert function

import pytest

from src.forest_hilbert.errors import BudgetExceededError, ConfigError, CyclicForestError, InvalidEdgeError
from src.forest_hilbert.forests import (
    ActivityTable,
    HilbertFunction,
    activity_table,
    clone_activity_check,
    count_labeled_forests,
    enumerate_labeled_forests,
    enumerate_subforests,
    external_activity,
    hilbert_from_forests,
    hilbert_from_table,
    postnikov_shapiro_dims,
)
from src.forest_hilbert.graph import Multigraph

TRIANGLE_COUNTS = {(0, 0): 1, (1, 0): 3, (2, 0): 2, (2, 1): 1}


def test_external_activity_triangle(triangle):
    """Test that only the forest {1, 2} makes edge 0 active."""
    assert external_activity(triangle, [1, 2]) == (1, (0,))
    assert external_activity(triangle, [0, 1]) == (0, ())
    assert external_activity(triangle, [0, 2]) == (0, ())
    assert external_activity(triangle, []) == (0, ())


def test_loops_always_active(loop_graph):
    """Test that a loop is externally active for every forest."""
    assert external_activity(loop_graph, []) == (1, (0,))


def test_parallel_edges(two_parallel):
    """Test activity on a parallel pair: only the later edge activates the earlier one."""
    assert external_activity(two_parallel, [1]) == (1, (0,))
    assert external_activity(two_parallel, [0]) == (0, ())


def test_cyclic_forest_rejected(triangle, two_parallel):
    """Test that edge sets containing a cycle raise."""
    with pytest.raises(CyclicForestError):
        external_activity(triangle, [0, 1, 2])
    with pytest.raises(CyclicForestError):
        external_activity(two_parallel, [0, 1])


def test_invalid_forest_index(triangle):
    """Test that out-of-range edge indices raise."""
    with pytest.raises(InvalidEdgeError):
        external_activity(triangle, [5])


def test_enumeration_order(triangle):
    """Test that subforests come in lexicographic order of their sorted indices."""
    edge_sets = [r.edge_set for r in enumerate_subforests(triangle)]
    assert edge_sets == [(), (0,), (0, 1), (0, 2), (1,), (1, 2), (2,)]


def test_enumeration_cap(triangle):
    """Test that the subforest cap aborts enumeration."""
    with pytest.raises(BudgetExceededError) as exc:
        enumerate_subforests(triangle, max_forests=3)
    assert exc.value.limit == 3


def test_activity_table_triangle(triangle):
    """Test the activity table of the triangle."""
    table = activity_table(triangle)
    assert dict(table.counts) == TRIANGLE_COUNTS
    assert table.total() == 7
    assert table.rank == 2
    assert table.by_size() == {0: 1, 1: 3, 2: 3}


def test_activity_table_edge_order_invariant(triangle, k4):
    """Test that the table does not depend on the edge order."""
    assert activity_table(triangle.permuted([2, 0, 1])).counts == activity_table(triangle).counts
    assert activity_table(k4.permuted([5, 3, 1, 0, 2, 4])).counts == activity_table(k4).counts


def test_table_frame(triangle):
    """Test the pandas pivot of the activity table."""
    frame = activity_table(triangle).to_frame()
    assert list(frame.index) == [0, 1, 2]
    assert frame.loc[2, 1] == 1
    assert frame.loc[1, 0] == 3
    assert frame.loc[1, 1] == 0


def test_table_json():
    """Test the JSON form of the activity table."""
    table = ActivityTable(v=3, e=3, c=1, counts=TRIANGLE_COUNTS)
    data = table.to_json()
    assert data["counts"] == [[0, 0, 1], [1, 0, 3], [2, 0, 2], [2, 1, 1]]
    assert ActivityTable.from_json(data) == table


@pytest.mark.parametrize(
    "name,t,dims",
    [
        ("triangle", 1, (1, 2, 3, 1)),
        ("triangle", 2, (1, 2, 3, 4, 5, 3, 1)),
        ("single_edge", 2, (1, 1, 1)),
        ("path3", 2, (1, 2, 3, 2, 1)),
        ("loop_graph", 5, (1, 0, 0, 0, 0, 0)),
        ("empty_graph", 4, (1,)),
    ],
)
def test_hilbert_from_forests(request, name, t, dims):
    """Test forest-side Hilbert functions of small graphs."""
    g = request.getfixturevalue(name)
    h = hilbert_from_forests(g, t)
    assert h.dims == dims
    assert len(h.dims) == t * g.e + 1


def test_hilbert_total_counts_labeled_forests(triangle, k4):
    """Test that the dimensions sum to the number of t-labeled forests."""
    assert hilbert_from_forests(triangle, 2).total() == 19
    table = activity_table(k4)
    assert count_labeled_forests(table, 3) == 586
    assert hilbert_from_table(table, 3).total() == 586


def test_degree_one_is_rank(k4, c4, path3):
    """Test that the degree-one dimension equals v - c."""
    for g in (k4, c4, path3):
        assert hilbert_from_forests(g, 2).dim(1) == g.rank


def test_t1_activity_description(triangle, k4, loop_graph):
    """Test the t = 1 description through forests of activity e - |F| - k."""
    for g in (triangle, k4, loop_graph):
        table = activity_table(g)
        assert postnikov_shapiro_dims(table) == hilbert_from_table(table, 1)


def test_hilbert_function_helpers():
    """Test dim, top_degree and trimmed."""
    h = HilbertFunction(t=2, dims=(1, 2, 0, 0))
    assert h.dim(1) == 2
    assert h.dim(9) == 0
    assert h.top_degree() == 1
    assert h.trimmed() == (1, 2)
    assert h == HilbertFunction.from_json(h.to_json())
    assert HilbertFunction(t=2, dims=(0, 0)).top_degree() == -1


@pytest.mark.parametrize(
    "data",
    [
        {"t": 2, "dims": [1.7, 1.2, 1.9]},
        {"t": 2.0, "dims": [1, 1, 1]},
        {"t": 2, "dims": ["1/2", 1, 1]},
        {"t": 2, "dims": [True, 1, 1]},
        {"t": 2, "dims": "111"},
    ],
)
def test_hilbert_json_rejects_non_integers(data):
    """Test that non-integral dimensions and t are refused."""
    with pytest.raises(ConfigError):
        HilbertFunction.from_json(data)


def test_hilbert_json_integral_strings():
    """Test that integral decimal strings are accepted."""
    h = HilbertFunction.from_json({"t": "2", "dims": ["1", " 1 ", "+1"]})
    assert h == HilbertFunction(t=2, dims=(1, 1, 1))


def test_labeled_forests(triangle):
    """Test that every subforest gets every labeling."""
    labeled = enumerate_labeled_forests(triangle, 2)
    assert len(labeled) == 19
    assert {f.weight for f in labeled if f.edge_set == (1, 2)} == {2, 3, 4}


def test_labeled_forest_cap(k4):
    """Test that the labeled enumeration respects the cap."""
    with pytest.raises(BudgetExceededError):
        enumerate_labeled_forests(k4, 3, max_forests=100)


@pytest.mark.parametrize("t", [1, 2, 3])
def test_clone_activity(triangle, two_parallel, t):
    """Test act of the cloned forest is t*act(F) + weight - |F|."""
    assert clone_activity_check(triangle, t) == []
    assert clone_activity_check(two_parallel, t) == []


def test_clone_activity_with_loop():
    """Test the clone activity relation with a loop present."""
    g = Multigraph(3, ((0, 1), (1, 1), (1, 2), (0, 2)))
    assert clone_activity_check(g, 2) == []
