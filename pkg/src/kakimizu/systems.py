"""Surface systems: abstract vertex families with pairwise intersection patterns.

A :class:`SurfaceSystem` is the desk-scale stand-in for the set of minimal
genus Seifert surfaces of a knot: a finite list of vertex ids, a complexity
per vertex, and one :class:`~kakimizu.patterns.OffsetPattern` per vertex pair
(absent means disjoint).  Patterns are stored once, for the lexicographically
smaller ordered pair; the reverse orientation is always derived by
:func:`~kakimizu.patterns.dualize`, so the table cannot go out of sync.

Model backends (line, lattice, graph-derived) additionally provide a double
curve sum: an operation producing, for an intersecting pair, interpolating
vertices that are disjoint from one input and strictly closer to the other in
covering spread.  That single contract drives both the geodesic construction
and the complexity-descent cycle reduction.
"""
from __future__ import annotations

import heapq
import itertools
import json
import random
from collections import deque
from dataclasses import dataclass

from .complexes import build_complex
from .homotopy import (HomotopyResult, apply_move, normalize_cycle,
                       reduce_cycle_homotopy, validate_cycle)
from .patterns import (EMPTY_PATTERN, OffsetPattern, covering_spread, dualize,
                       intersection_number, validate_pattern)


class SystemFormatError(ValueError):
    """A system description violates the file schema or a pattern invariant."""


class UnsupportedBackend(RuntimeError):
    """The backend lacks the capability the operation needs."""


class BackendContractError(RuntimeError):
    """A backend returned data breaking its declared contract."""


@dataclass(frozen=True, order=True)
class Complexity:
    """Lexicographically ordered pair of non-negative integers; adds
    componentwise so complexity sums can be compared in reduction."""

    primary: int = 0
    secondary: int = 0

    def __post_init__(self):
        for x in (self.primary, self.secondary):
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise ValueError(f"complexity entries must be non-negative integers, got {x!r}")

    def __add__(self, other: "Complexity") -> "Complexity":
        return Complexity(self.primary + other.primary, self.secondary + other.secondary)


def canonical_pair(u, v):
    return (u, v) if u < v else (v, u)


class SurfaceSystem:
    """Finite abstract family of surface classes.

    ``vertices`` is an iterable of ``(id, Complexity)``; ``patterns`` maps the
    canonically ordered id pair to a nonempty valid pattern.  ``dcs`` is an
    optional backend callable ``(system, u, v) -> (minus, plus)`` and
    ``strict_descent`` declares the complexity inequality
    ``c(minus) + c(plus) < c(u) + c(v)`` for every summed pair.
    """

    def __init__(self, vertices, patterns=None, dcs=None, strict_descent=False):
        verts = {}
        for vid, cx in vertices:
            if not isinstance(vid, str):
                raise SystemFormatError(f"vertex id {vid!r}: must be a string")
            if vid in verts:
                raise SystemFormatError(f"duplicate vertex id {vid!r}")
            if not isinstance(cx, Complexity):
                cx = Complexity(*cx)
            verts[vid] = cx
        self._vertices = dict(sorted(verts.items()))
        pats = {}
        for key, pat in sorted((patterns or {}).items()):
            u, v = key
            if u not in self._vertices or v not in self._vertices:
                raise SystemFormatError(f"pattern pair {key!r} mentions an unknown vertex")
            if not u < v:
                raise SystemFormatError(f"pattern pair {key!r} is not in canonical order")
            if pat.is_empty():
                raise SystemFormatError(f"pattern pair {key!r}: empty patterns must be omitted")
            problems = validate_pattern(pat)
            if problems:
                raise SystemFormatError(f"pattern pair {key!r}: " + "; ".join(problems))
            pats[(u, v)] = pat
        self._patterns = pats
        self._dcs = dcs
        self.strict_descent = bool(strict_descent)

    @property
    def supports_dcs(self) -> bool:
        return self._dcs is not None

    def vertex_ids(self) -> tuple:
        return tuple(self._vertices)

    def complexity(self, v) -> Complexity:
        if v not in self._vertices:
            raise ValueError(f"unknown vertex {v!r}")
        return self._vertices[v]

    def pattern(self, u, v) -> OffsetPattern:
        """Pattern of the ordered pair (u, v); the reverse of the stored
        orientation is obtained by dualizing."""
        if u == v:
            raise ValueError("pattern of a vertex with itself is undefined")
        for x in (u, v):
            if x not in self._vertices:
                raise ValueError(f"unknown vertex {x!r}")
        stored = self._patterns.get(canonical_pair(u, v))
        if stored is None:
            return EMPTY_PATTERN
        return stored if u < v else dualize(stored)

    def disjoint(self, u, v) -> bool:
        return self.pattern(u, v).is_empty()

    def spread(self, u, v) -> int:
        return covering_spread(self.pattern(u, v))

    def intersection(self, u, v) -> int:
        return intersection_number(self.pattern(u, v))

    def stored_patterns(self) -> dict:
        return dict(self._patterns)

    def vertex_items(self) -> tuple:
        return tuple(self._vertices.items())

    def __eq__(self, other):
        if not isinstance(other, SurfaceSystem):
            return NotImplemented
        return self._vertices == other._vertices and self._patterns == other._patterns

    def __repr__(self):
        return (f"SurfaceSystem({len(self._vertices)} vertices, "
                f"{len(self._patterns)} patterns, dcs={self.supports_dcs})")


# -- file format -------------------------------------------------------------


def load_system(text: str) -> SurfaceSystem:
    """Parse the JSON system format, diagnosing errors by entry and field.

    Loaded systems carry no double-curve-sum backend: the file format
    describes intersection data only, and new interpolating vertices cannot
    be synthesized from it.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SystemFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise SystemFormatError("top level must be an object")
    raw_vertices = data.get("vertices")
    if not isinstance(raw_vertices, list) or not raw_vertices:
        raise SystemFormatError("vertices: must be a nonempty list")
    vertices = []
    seen = set()
    for i, entry in enumerate(raw_vertices):
        where = f"vertices[{i}]"
        if not isinstance(entry, dict):
            raise SystemFormatError(f"{where}: must be an object")
        vid = entry.get("id")
        if not isinstance(vid, str) or not vid:
            raise SystemFormatError(f"{where}.id: must be a nonempty string")
        if vid in seen:
            raise SystemFormatError(f"{where}.id: duplicate id {vid!r}")
        seen.add(vid)
        cx = entry.get("complexity")
        if (not isinstance(cx, list) or len(cx) != 2
                or any(not isinstance(x, int) or isinstance(x, bool) or x < 0 for x in cx)):
            raise SystemFormatError(f"{where}.complexity: must be a pair of non-negative integers")
        vertices.append((vid, Complexity(cx[0], cx[1])))
    patterns = {}
    raw_patterns = data.get("patterns", [])
    if not isinstance(raw_patterns, list):
        raise SystemFormatError("patterns: must be a list")
    for i, entry in enumerate(raw_patterns):
        where = f"patterns[{i}]"
        if not isinstance(entry, dict):
            raise SystemFormatError(f"{where}: must be an object")
        u, v = entry.get("u"), entry.get("v")
        if not isinstance(u, str) or not isinstance(v, str):
            raise SystemFormatError(f"{where}.u/.v: must be strings")
        if u not in seen or v not in seen:
            raise SystemFormatError(f"{where}: unknown vertex in pair ({u!r}, {v!r})")
        if not u < v:
            raise SystemFormatError(f"{where}: pair must be listed in canonical order (u < v)")
        if (u, v) in patterns:
            raise SystemFormatError(f"{where}: duplicate pair ({u!r}, {v!r})")
        start = entry.get("support_start")
        if not isinstance(start, int) or isinstance(start, bool):
            raise SystemFormatError(f"{where}.support_start: must be an integer")
        counts = entry.get("counts")
        if not isinstance(counts, list) or not counts:
            raise SystemFormatError(f"{where}.counts: must be a nonempty list")
        pat = OffsetPattern(start, tuple(counts))
        problems = validate_pattern(pat)
        if problems:
            raise SystemFormatError(f"{where}: " + "; ".join(problems))
        patterns[(u, v)] = pat
    return SurfaceSystem(vertices, patterns)


def save_system(system: SurfaceSystem) -> str:
    """Serialize in canonical form: sorted vertices, sorted nonempty patterns."""
    obj = {
        "vertices": [
            {"id": vid, "complexity": [cx.primary, cx.secondary]}
            for vid, cx in system.vertex_items()
        ],
        "patterns": [
            {"u": u, "v": v, "support_start": pat.support_start, "counts": list(pat.counts)}
            for (u, v), pat in sorted(system.stored_patterns().items())
        ],
    }
    return json.dumps(obj, indent=2) + "\n"


# -- model backends ----------------------------------------------------------


def _store(patterns: dict, u: str, v: str, pat: OffsetPattern) -> None:
    # store under the canonical key, dualizing when the given orientation flips
    key = canonical_pair(u, v)
    patterns[key] = pat if key == (u, v) else dualize(pat)


def line_model(n_min: int, n_max: int) -> SurfaceSystem:
    """Linearly ordered stack of surfaces ``u_n``: consecutive ones disjoint,
    and a pair ``n - m`` apart meets in ``n - m - 1`` translates, once each.

    The disjointness complex is a path graph.  Complexities grow like
    ``n^2``, which makes the double curve sum strictly complexity-decreasing.
    """
    if n_min > n_max:
        raise ValueError("empty window")
    index = {f"u{n}": n for n in range(n_min, n_max + 1)}
    vertices = [(f"u{n}", Complexity(n * n, 0)) for n in range(n_min, n_max + 1)]
    patterns = {}
    for m in range(n_min, n_max + 1):
        for n in range(m + 2, n_max + 1):
            _store(patterns, f"u{m}", f"u{n}", OffsetPattern(1, (1,) * (n - m - 1)))

    def dcs(system, u, v):
        m, n = index[u], index[v]
        if m < n:
            return (f"u{n - 1}", f"u{m + 1}")
        return (f"u{n + 1}", f"u{m - 1}")

    return SurfaceSystem(vertices, patterns, dcs=dcs, strict_descent=True)


def lattice_distance(p: tuple, q: tuple) -> int:
    """Word metric of the triangular lattice with steps
    (±1,0), (0,±1), (±1,±1) of equal signs."""
    da, db = q[0] - p[0], q[1] - p[1]
    if da * db >= 0:
        return max(abs(da), abs(db))
    return abs(da) + abs(db)


def _lattice_step(frm: tuple, to: tuple) -> tuple:
    """One unit step from ``frm`` decreasing lattice distance to ``to``.
    Sign-compatible displacements step diagonally; mixed signs step in the
    first coordinate, so the step from u toward v is always the negative of
    the step from v toward u."""
    da, db = to[0] - frm[0], to[1] - frm[1]
    if da == 0 and db == 0:
        raise ValueError("no step between equal points")
    sa = (da > 0) - (da < 0)
    sb = (db > 0) - (db < 0)
    if da * db >= 0:
        return (frm[0] + sa, frm[1] + sb)
    return (frm[0] + sa, frm[1])


def lattice_model(width: int, height: int, a0: int = 0, b0: int = 0) -> SurfaceSystem:
    """Two-parameter family on a ``width x height`` window of the triangular
    lattice; a pair at graph distance D meets in D - 1 translates, once each.

    The disjointness complex is the triangulated grid: 2-dimensional, and the
    testbed for the locally-6-large/contractibility machinery.  Complexity is
    the lattice quadratic form ``a^2 + b^2 - ab``, under which stepping both
    endpoints toward each other strictly lowers the complexity sum.
    """
    if width < 2 or height < 2:
        raise ValueError("window must be at least 2x2")
    coords = [(a, b) for a in range(a0, a0 + width) for b in range(b0, b0 + height)]

    def vid(p):
        return f"{p[0]}_{p[1]}"

    def q(p):
        return p[0] * p[0] + p[1] * p[1] - p[0] * p[1]

    decode = {vid(p): p for p in coords}
    vertices = [(vid(p), Complexity(q(p), 0)) for p in coords]
    patterns = {}
    for p, r in itertools.combinations(coords, 2):
        d = lattice_distance(p, r)
        if d >= 2:
            u, v = canonical_pair(vid(p), vid(r))
            patterns[(u, v)] = OffsetPattern(1, (1,) * (d - 1))

    def dcs(system, u, v):
        pu, pv = decode[u], decode[v]
        minus = _lattice_step(pv, pu)
        plus = _lattice_step(pu, pv)
        return (vid(minus), vid(plus))

    return SurfaceSystem(vertices, patterns, dcs=dcs, strict_descent=True)


def graph_to_system(n_vertices: int, edges) -> SurfaceSystem:
    """System whose disjointness graph is the given connected simple graph:
    a pair at graph distance D gets the pattern with D - 1 unit counts.

    The distance/spread relation then holds by construction, which makes
    these systems consistency fuzzers for the pipeline rather than
    independent tests of the theory.  The double curve sum steps along BFS
    geodesics (lexicographically least neighbor); no complexity descent is
    declared, so reductions over these systems run under a step budget.
    """
    if n_vertices < 1:
        raise ValueError("need at least one vertex")
    ids = [f"g{i}" for i in range(n_vertices)]
    adj = {i: set() for i in range(n_vertices)}
    for a, b in edges:
        if a == b:
            raise ValueError(f"self-loop at {a}")
        if not (0 <= a < n_vertices and 0 <= b < n_vertices):
            raise ValueError(f"edge ({a}, {b}) out of range")
        adj[a].add(b)
        adj[b].add(a)
    dist = {}
    for s in range(n_vertices):
        level = {s: 0}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in level:
                    level[y] = level[x] + 1
                    queue.append(y)
        if len(level) != n_vertices:
            raise ValueError("graph must be connected")
        dist[s] = level
    vertices = [(vid, Complexity(0, 0)) for vid in ids]
    patterns = {}
    for i, j in itertools.combinations(range(n_vertices), 2):
        d = dist[i][j]
        if d >= 2:
            _store(patterns, ids[i], ids[j], OffsetPattern(1, (1,) * (d - 1)))
    sorted_adj = {i: sorted(adj[i]) for i in range(n_vertices)}
    index = {vid: i for i, vid in enumerate(ids)}

    def dcs(system, u, v):
        iu, iv = index[u], index[v]
        d = dist[iu][iv]
        minus = min(w for w in sorted_adj[iv] if dist[iu][w] == d - 1)
        plus = min(w for w in sorted_adj[iu] if dist[iv][w] == d - 1)
        return (ids[minus], ids[plus])

    return SurfaceSystem(vertices, patterns, dcs=dcs, strict_descent=False)


def random_connected_graph(n: int, extra_edge_prob: float, rng: random.Random):
    """Uniform random labelled tree (via a random Pruefer sequence) plus each
    chord independently with the given probability.  Connected by construction."""
    if n < 1:
        raise ValueError("need at least one vertex")
    edges = set()
    if n == 2:
        edges.add((0, 1))
    elif n >= 3:
        seq = [rng.randrange(n) for _ in range(n - 2)]
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        leaves = [i for i in range(n) if degree[i] == 1]
        heapq.heapify(leaves)
        for x in seq:
            leaf = heapq.heappop(leaves)
            edges.add((min(leaf, x), max(leaf, x)))
            degree[x] -= 1
            if degree[x] == 1:
                heapq.heappush(leaves, x)
        u = heapq.heappop(leaves)
        v = heapq.heappop(leaves)
        edges.add((min(u, v), max(u, v)))
    for i, j in itertools.combinations(range(n), 2):
        if (i, j) not in edges and rng.random() < extra_edge_prob:
            edges.add((i, j))
    return sorted(edges)


# -- double curve sum, geodesics, cycle reduction ----------------------------


def double_curve_sum(system: SurfaceSystem, u, v):
    """Interpolating pair ``(minus, plus)`` for an intersecting pair (u, v).

    Contract every backend satisfies: ``minus`` is disjoint from ``v`` and
    ``spread(u, minus) <= spread(u, v) - 1``; when ``spread(u, v) == 1`` both
    outputs are disjoint from both inputs; and under ``strict_descent`` the
    complexity sum of the outputs is strictly below that of the inputs.
    """
    if not system.supports_dcs:
        raise UnsupportedBackend("this system has no double curve sum backend")
    cs = system.spread(u, v)
    if cs == 0:
        raise ValueError("nothing to sum: the surfaces are disjoint")
    return system._dcs(system, u, v)


def geodesic(system: SurfaceSystem, u, v):
    """Path from v to u realizing the distance.

    With a double curve sum the path is built constructively: each step
    replaces the current endpoint with the `minus` output, which is disjoint
    from it and strictly closer to u in covering spread, so after spread(u,v)
    steps the endpoints are disjoint.  Without a backend this degrades to a
    breadth-first geodesic in the disjointness complex.
    """
    if u == v:
        return (u,)
    if not system.supports_dcs:
        path = build_complex(system, max_dim=1).shortest_path(v, u)
        if path is None:
            raise ValueError(f"no path from {v!r} to {u!r}")
        return path
    path = [v]
    cur = v
    while True:
        cs = system.spread(u, cur)
        if cs == 0:
            path.append(u)
            return tuple(path)
        minus, _plus = double_curve_sum(system, u, cur)
        if minus == cur or not system.disjoint(minus, cur):
            raise BackendContractError(
                f"double curve sum output {minus!r} is not disjoint from {cur!r}")
        new_cs = system.spread(u, minus) if minus != u else 0
        if new_cs >= cs:
            raise BackendContractError(
                f"covering spread failed to decrease: {cs} -> {new_cs} at {cur!r}")
        path.append(minus)
        cur = minus


def kakimizu_null_homotopy(system: SurfaceSystem, cycle, max_steps: int | None = None,
                           complex=None) -> HomotopyResult:
    """Contract a cycle by the complexity-descent procedure.

    Repeatedly pick a vertex of maximal complexity.  If its cycle neighbors
    are disjoint, cut the corner.  Otherwise the neighbors are at distance 2,
    so their covering spread is 1 and the double curve sum hands back vertices
    disjoint from both; substitute the cheaper one (a detour-then-cut pair of
    moves) and descend.  With ``strict_descent`` the complexity sum strictly
    drops at every substitution; other backends run under a step budget and
    may return an inconclusive trace.

    Without a double curve sum backend this degrades to the generic bounded
    search of :func:`~kakimizu.homotopy.reduce_cycle_homotopy`.
    """
    X = complex if complex is not None else build_complex(system, max_dim=1)
    start = validate_cycle(X, cycle)
    if not system.supports_dcs:
        return reduce_cycle_homotopy(X, start, max_len=2 * len(start) + 2,
                                     max_steps=max_steps or 100_000)
    budget = max_steps if max_steps is not None else max(1, 10 * len(start) * len(X.vertices))
    c, moves = normalize_cycle(X, start)
    steps = 0
    while len(c) > 1:
        steps += 1
        if steps > budget:
            return HomotopyResult(False, start, tuple(moves), c, steps,
                                  "step budget exhausted")
        L = len(c)
        order = sorted(range(L), key=lambda i: (_neg_key(system.complexity(c[i])), i))
        progressed = False
        for i in order:
            a, b = c[(i - 1) % L], c[(i + 1) % L]
            if system.disjoint(a, b):
                mv = ("shorten", (i - 1) % L)
                c2, extra = normalize_cycle(X, apply_move(X, c, mv))
                c = c2
                moves += [mv] + extra
                progressed = True
                break
            if system.spread(a, b) != 1:
                # distance-2 neighbors should have spread 1; anything else is
                # an inconsistent pattern table, so skip this corner
                continue
            minus, plus = double_curve_sum(system, a, b)
            candidates = sorted({minus, plus}, key=lambda x: (system.complexity(x), x))
            old = c[i]
            for cand in candidates:
                if cand == old or not X.has_edge(cand, old):
                    continue
                if not (X.has_edge(cand, a) and X.has_edge(cand, b)):
                    continue
                mv1 = ("lengthen", i, cand)
                c1 = apply_move(X, c, mv1)
                mv2 = ("shorten", (i - 1) % L if i >= 1 else L)
                c2, extra = normalize_cycle(X, apply_move(X, c1, mv2))
                c = c2
                moves += [mv1, mv2] + extra
                progressed = True
                break
            if progressed:
                break
        if not progressed:
            return HomotopyResult(False, start, tuple(moves), c, steps,
                                  "no applicable move")
    return HomotopyResult(True, start, tuple(moves), c, steps, "complexity descent")


def _neg_key(cx: Complexity):
    return (-cx.primary, -cx.secondary)
