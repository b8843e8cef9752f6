"""Elementary homotopy moves on closed edge paths, and bounded reduction.

A cycle is a cyclic list of vertices (the closing edge is implicit).  Three
moves generate edge-path homotopy in a flag complex:

* ``("backtrack", i)`` erases a retraced edge: ``c[i], c[i+1], c[i]``
  collapses to ``c[i]``.
* ``("shorten", i)`` cuts the corner at ``i`` across the diagonal edge
  ``{c[i], c[i+2]}``; with both cycle edges present the triangle is a clique,
  hence a 2-simplex, so the cut is a homotopy.
* ``("lengthen", i, v)`` is the inverse cut: detour through ``v`` between
  ``c[i]`` and ``c[i+1]``.

Reduction searches this move graph.  Success certificates replay
move-by-move; an inconclusive result proves nothing about the cycle.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass


def validate_cycle(X, cycle) -> tuple:
    """Closed-walk check: known vertices, cyclically consecutive pairs are
    distinct and adjacent.  Returns the cycle as a tuple."""
    c = tuple(cycle)
    if not c:
        raise ValueError("empty cycle")
    for v in c:
        X.require_vertex(v)
    if len(c) == 1:
        return c
    for i, u in enumerate(c):
        w = c[(i + 1) % len(c)]
        if u == w:
            raise ValueError(f"repeated consecutive vertex {u!r}")
        if not X.has_edge(u, w):
            raise ValueError(f"({u!r}, {w!r}) is not an edge")
    return c


def apply_move(X, cycle, move) -> tuple:
    """Apply one move, validating its preconditions against the complex."""
    c = tuple(cycle)
    L = len(c)
    kind = move[0]
    if kind == "backtrack":
        i = move[1]
        if L < 2 or not 0 <= i < L:
            raise ValueError(f"backtrack index {i} out of range for length {L}")
        if L == 2:
            return (c[i],)
        j, k = (i + 1) % L, (i + 2) % L
        if c[i] != c[k]:
            raise ValueError(f"no backtrack at index {i}")
        return tuple(x for t, x in enumerate(c) if t not in (j, k))
    if kind == "shorten":
        i = move[1]
        if L < 3 or not 0 <= i < L:
            raise ValueError(f"shorten index {i} out of range for length {L}")
        j, k = (i + 1) % L, (i + 2) % L
        if c[i] == c[k]:
            raise ValueError(f"corner at {i} is a backtrack, not a shortening")
        if not X.has_edge(c[i], c[k]):
            raise ValueError(f"no diagonal edge ({c[i]!r}, {c[k]!r})")
        return tuple(x for t, x in enumerate(c) if t != j)
    if kind == "lengthen":
        i, v = move[1], move[2]
        if L < 2 or not 0 <= i < L:
            raise ValueError(f"lengthen index {i} out of range for length {L}")
        j = (i + 1) % L
        if v == c[i] or v == c[j]:
            raise ValueError("detour vertex must differ from its endpoints")
        if not (X.has_edge(c[i], v) and X.has_edge(v, c[j])):
            raise ValueError(f"{v!r} is not adjacent to both detour endpoints")
        return c[: i + 1] + (v,) + c[i + 1:]
    raise ValueError(f"unknown move kind {kind!r}")


def replay(X, cycle, moves) -> tuple:
    """Fold a move sequence over a starting cycle, validating every step."""
    c = validate_cycle(X, cycle)
    for mv in moves:
        c = apply_move(X, c, mv)
    return c


def normalize_cycle(X, cycle):
    """Erase retraced edges until none remain.  Returns (cycle, moves)."""
    c = tuple(cycle)
    moves = []
    while True:
        L = len(c)
        if L <= 1:
            break
        if L == 2:
            mv = ("backtrack", 0)
            c = apply_move(X, c, mv)
            moves.append(mv)
            continue
        for i in range(L):
            if c[i] == c[(i + 2) % L]:
                mv = ("backtrack", i)
                c = apply_move(X, c, mv)
                moves.append(mv)
                break
        else:
            break
    return c, moves


def canonical_cycle(cycle) -> tuple:
    """Least rotation over both orientations; the hash key for search states."""
    c = tuple(cycle)
    L = len(c)
    if L <= 1:
        return c
    best = None
    for d in (c, tuple(reversed(c))):
        for r in range(L):
            cand = d[r:] + d[:r]
            if best is None or cand < best:
                best = cand
    return best


@dataclass(frozen=True)
class HomotopyResult:
    """Outcome of a reduction attempt.

    When ``reduced`` is true, ``moves`` replays from ``start`` down to the
    constant cycle ``final``.  Otherwise ``moves`` is still a valid homotopy
    trace from ``start`` to ``final``, and ``reason`` says why the search
    stopped; this never certifies nontriviality.
    """

    reduced: bool
    start: tuple
    moves: tuple = ()
    final: tuple = ()
    steps: int = 0
    reason: str = ""

    @property
    def essential_moves(self) -> int:
        """Moves other than free backtrack erasure."""
        return sum(1 for mv in self.moves if mv[0] != "backtrack")


def _shorten_candidates(X, c):
    L = len(c)
    for i in range(L):
        k = (i + 2) % L
        if c[i] != c[k] and X.has_edge(c[i], c[k]):
            yield i


def _greedy_descend(X, c, budget):
    """Deterministic descent: cut corners when a diagonal exists, otherwise
    swap a corner vertex for a neighbor coning over three consecutive
    vertices.  A visited set keeps the substitutions from cycling."""
    moves = []
    steps = 0
    seen = {canonical_cycle(c)}
    while len(c) > 1 and steps < budget:
        steps += 1
        L = len(c)
        applied = False
        for i in _shorten_candidates(X, c):
            mv = ("shorten", i)
            c2, extra = normalize_cycle(X, apply_move(X, c, mv))
            c = c2
            moves += [mv] + extra
            applied = True
            break
        if applied:
            seen.add(canonical_cycle(c))
            continue
        for i in range(L):
            j, k = (i + 1) % L, (i + 2) % L
            for v in X.common_neighbors(c[i], c[j]):
                if v in (c[i], c[j], c[k]) or not X.has_edge(v, c[k]):
                    continue
                mv1 = ("lengthen", j, v)
                c1 = apply_move(X, c, mv1)
                mv2 = ("shorten", i if i < j else L)
                c2, extra = normalize_cycle(X, apply_move(X, c1, mv2))
                key = canonical_cycle(c2)
                if key in seen:
                    continue
                seen.add(key)
                c = c2
                moves += [mv1, mv2] + extra
                applied = True
                break
            if applied:
                break
        if not applied:
            break
    return c, moves, steps


def _one_move_neighbors(X, c, max_len):
    """All states one essential move away, normalized, in deterministic order."""
    out = []
    L = len(c)
    for i in _shorten_candidates(X, c):
        mv = ("shorten", i)
        nc, extra = normalize_cycle(X, apply_move(X, c, mv))
        out.append(([mv] + extra, nc))
    if L + 1 <= max_len:
        for i in range(L):
            j = (i + 1) % L
            for v in X.common_neighbors(c[i], c[j]):
                if v in (c[i], c[j]):
                    continue
                mv = ("lengthen", i, v)
                nc, extra = normalize_cycle(X, apply_move(X, c, mv))
                out.append(([mv] + extra, nc))
    return out


def reduce_cycle_homotopy(X, cycle, max_len: int | None = None,
                          max_steps: int = 100_000) -> HomotopyResult:
    """Bounded null-homotopy search over the move graph.

    Backtracks are erased eagerly (they are free), then a greedy descent
    handles the common cases, and a breadth-first search over canonical
    cycle states up to ``max_len`` covers the rest of the budget.
    """
    start = validate_cycle(X, cycle)
    if max_len is None:
        max_len = 2 * len(start) + 2
    c0, pre = normalize_cycle(X, start)
    if len(c0) <= 1:
        return HomotopyResult(True, start, tuple(pre), c0, 0, "backtrack erasure")
    gc, gmoves, steps = _greedy_descend(X, c0, max_steps)
    if len(gc) <= 1:
        return HomotopyResult(True, start, tuple(pre + gmoves), gc, steps, "greedy descent")
    # breadth-first over canonical states, recording how to reach each one
    root = canonical_cycle(c0)
    entries = {root: (c0, None, [])}
    queue = deque([root])
    while queue and steps < max_steps:
        key = queue.popleft()
        concrete = entries[key][0]
        steps += 1
        for mvs, nc in _one_move_neighbors(X, concrete, max_len):
            nkey = canonical_cycle(nc)
            if nkey in entries:
                continue
            entries[nkey] = (nc, key, mvs)
            if len(nc) <= 1:
                chain = []
                k = nkey
                while k is not None:
                    concrete_k, parent, mvs_k = entries[k]
                    chain.append(mvs_k)
                    k = parent
                flat = [mv for mvs_k in reversed(chain) for mv in mvs_k]
                return HomotopyResult(True, start, tuple(pre + flat), nc, steps,
                                      "breadth-first search")
            queue.append(nkey)
    reason = "step budget exhausted" if queue else "move space exhausted within max_len"
    return HomotopyResult(False, start, tuple(pre + gmoves), gc, steps, reason)
