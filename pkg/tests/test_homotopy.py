import pytest

import kakimizu as kk
from kakimizu import (FlagComplex, apply_move, build_complex, canonical_cycle,
                      normalize_cycle, reduce_cycle_homotopy, replay, validate_cycle)


def triangle():
    return FlagComplex("abc", [("a", "b"), ("b", "c"), ("a", "c")], max_dim=3)


def hexagon():
    return FlagComplex(range(6), [(i, (i + 1) % 6) for i in range(6)], max_dim=3)


# -- move semantics ----------------------------------------------------------


def test_backtrack_removes_retraced_edge():
    X = build_complex(kk.line_model(0, 3), max_dim=1)
    assert apply_move(X, ("u0", "u1", "u0", "u1"), ("backtrack", 0)) == ("u0", "u1")
    assert apply_move(X, ("u0", "u1"), ("backtrack", 0)) == ("u0",)
    assert apply_move(X, ("u0", "u1"), ("backtrack", 1)) == ("u1",)


def test_backtrack_wraps_around():
    X = build_complex(kk.line_model(0, 3), max_dim=1)
    # corner at the seam: positions 3, 0, 1 spell u1, u2, u1
    c = ("u2", "u1", "u2", "u1")
    assert apply_move(X, c, ("backtrack", 3)) == ("u2", "u1")


def test_shorten_requires_diagonal():
    X = triangle()
    assert apply_move(X, ("a", "b", "c"), ("shorten", 0)) == ("a", "c")
    Y = hexagon()
    with pytest.raises(ValueError, match="no diagonal"):
        apply_move(Y, tuple(range(6)), ("shorten", 0))


def test_shorten_rejects_backtrack_corner():
    X = build_complex(kk.line_model(0, 3), max_dim=1)
    with pytest.raises(ValueError, match="backtrack"):
        apply_move(X, ("u0", "u1", "u0", "u1"), ("shorten", 0))


def test_lengthen_inserts_detour():
    X = triangle()
    assert apply_move(X, ("a", "b"), ("lengthen", 0, "c")) == ("a", "c", "b")
    with pytest.raises(ValueError, match="adjacent"):
        apply_move(hexagon(), (0, 1), ("lengthen", 0, 3))
    with pytest.raises(ValueError, match="differ"):
        apply_move(X, ("a", "b"), ("lengthen", 0, "a"))


def test_unknown_move_kind():
    with pytest.raises(ValueError, match="unknown move"):
        apply_move(triangle(), ("a", "b"), ("teleport", 0))


def test_validate_cycle_errors():
    X = triangle()
    with pytest.raises(ValueError, match="empty"):
        validate_cycle(X, ())
    with pytest.raises(ValueError, match="unknown vertex"):
        validate_cycle(X, ("a", "z"))
    with pytest.raises(ValueError, match="repeated consecutive"):
        validate_cycle(X, ("a", "a", "b"))
    with pytest.raises(ValueError, match="not an edge"):
        validate_cycle(hexagon(), (0, 1, 3))


def test_normalize_erases_nested_backtracks():
    X = build_complex(kk.line_model(0, 4), max_dim=1)
    c, moves = normalize_cycle(X, ("u0", "u1", "u2", "u3", "u2", "u1"))
    assert len(c) == 1
    assert all(mv[0] == "backtrack" for mv in moves)
    assert replay(X, ("u0", "u1", "u2", "u3", "u2", "u1"), moves) == c


def test_canonical_cycle_rotation_reflection():
    assert canonical_cycle((2, 0, 1)) == (0, 1, 2)
    assert canonical_cycle((0, 2, 1)) == (0, 1, 2)
    assert canonical_cycle(("b",)) == ("b",)


# -- reduction ---------------------------------------------------------------


def test_three_cycle_reduces_in_one_essential_move():
    X = triangle()
    result = reduce_cycle_homotopy(X, ("a", "b", "c"))
    assert result.reduced
    assert result.essential_moves <= 1
    assert len(replay(X, ("a", "b", "c"), result.moves)) == 1


def test_hexagon_without_2_cells_is_inconclusive_at_any_bound():
    X = hexagon()
    for max_len, max_steps in ((6, 100), (12, 10_000), (20, 50_000)):
        result = reduce_cycle_homotopy(X, tuple(range(6)), max_len, max_steps)
        assert not result.reduced
    # with no triangles there is not a single applicable essential move
    assert reduce_cycle_homotopy(X, tuple(range(6)), 6, 100).reason.startswith("move space")


def test_lattice_hexagon_reduces_within_short_detours(lattice5):
    X = build_complex(lattice5, max_dim=1)
    ring = ("2_1", "2_2", "1_2", "0_1", "0_0", "1_0")
    result = reduce_cycle_homotopy(X, ring, max_len=8, max_steps=10_000)
    assert result.reduced
    assert replay(X, ring, result.moves) == result.final
    assert len(result.final) <= 1


def test_every_short_lattice_cycle_reduces(lattice5):
    X = build_complex(lattice5, max_dim=1)
    for cycle in kk.embedded_cycles(X, 7):
        result = reduce_cycle_homotopy(X, cycle, max_len=14, max_steps=100_000)
        assert result.reduced, cycle
        assert len(replay(X, cycle, result.moves)) <= 1


def test_reduction_is_deterministic(lattice5):
    X = build_complex(lattice5, max_dim=1)
    ring = ("2_1", "2_2", "1_2", "0_1", "0_0", "1_0")
    a = reduce_cycle_homotopy(X, ring, max_len=10, max_steps=5_000)
    b = reduce_cycle_homotopy(X, ring, max_len=10, max_steps=5_000)
    assert a == b


def test_inconclusive_trace_is_still_a_valid_homotopy():
    # a hexagon with one extra chord-triangle: the greedy pass makes progress
    # (cutting the chorded corner) but cannot finish
    X = FlagComplex(range(6), [(i, (i + 1) % 6) for i in range(6)] + [(0, 2)],
                    max_dim=3)
    result = reduce_cycle_homotopy(X, tuple(range(6)), max_len=6, max_steps=10)
    assert not result.reduced
    assert replay(X, tuple(range(6)), result.moves) == result.final


def test_backtracking_walk_reduces_for_free():
    X = build_complex(kk.line_model(0, 5), max_dim=1)
    result = reduce_cycle_homotopy(X, ("u2", "u3", "u4", "u3"))
    assert result.reduced
    assert result.essential_moves == 0
