"""Undirected multigraphs with loops, and their structural invariants.

The central input object of the package. Vertices are dense 0-indexed
integers; parallel edges live in a symmetric multiplicity table and loops in
a per-vertex counter. Degree follows the convention that a loop adds 2 (so
the adjacency matrix gets 2 on the diagonal per loop), which is load-bearing
for engine agreement on bouquets and dumbbells.

Everything here is immutable; a Multigraph can be hashed and used as a
dictionary key.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import GraphValidationError, InputError
from .polydet import bareiss_int_det


class Multigraph:
    """Immutable multigraph: loop counts plus a symmetric multiplicity table."""

    __slots__ = ("n", "loops", "mult")

    def __init__(self, n: int, loops, mult):
        if n < 1:
            raise InputError("a multigraph needs at least one vertex")
        loops = tuple(int(x) for x in loops)
        mult = tuple(tuple(int(x) for x in row) for row in mult)
        if len(loops) != n or len(mult) != n or any(len(r) != n for r in mult):
            raise InputError("table dimensions do not match vertex count")
        if any(x < 0 for x in loops):
            raise InputError("negative loop count")
        for i in range(n):
            if mult[i][i] != 0:
                raise InputError("diagonal of the multiplicity table must be 0")
            for j in range(n):
                if mult[i][j] < 0:
                    raise InputError("negative edge multiplicity")
                if mult[i][j] != mult[j][i]:
                    raise InputError("multiplicity table must be symmetric")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "loops", loops)
        object.__setattr__(self, "mult", mult)

    def __setattr__(self, name, value):
        raise AttributeError("Multigraph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (self.n, self.loops, self.mult) == (other.n, other.loops, other.mult)

    def __hash__(self):
        return hash((self.n, self.loops, self.mult))

    def __repr__(self):
        return f"Multigraph(n={self.n}, edges={self.edge_list()})"

    # --- counts and degrees ---

    @property
    def edge_count(self) -> int:
        e = sum(self.loops)
        for i in range(self.n):
            for j in range(i + 1, self.n):
                e += self.mult[i][j]
        return e

    def degree(self, v: int) -> int:
        return 2 * self.loops[v] + sum(self.mult[v])

    def degrees(self):
        return tuple(self.degree(v) for v in range(self.n))

    @property
    def rank(self) -> int:
        """Cycle rank |E| - |V| + 1 (meaningful for connected graphs)."""
        return self.edge_count - self.n + 1

    def edge_list(self):
        """Labelled expansion: one (u, v) pair per edge, u <= v, loops as (v, v)."""
        out = []
        for v in range(self.n):
            out.extend([(v, v)] * self.loops[v])
        for i in range(self.n):
            for j in range(i + 1, self.n):
                out.extend([(i, j)] * self.mult[i][j])
        return out

    def neighbors(self, v: int):
        """Distinct non-loop neighbours of v in the simple support."""
        return [u for u in range(self.n) if self.mult[v][u] > 0]


def build_multigraph(edge_list, n_vertices: int) -> Multigraph:
    """Accumulate an edge list into a Multigraph; (v, v) pairs are loops."""
    if n_vertices < 1:
        raise InputError("n_vertices must be >= 1")
    loops = [0] * n_vertices
    mult = [[0] * n_vertices for _ in range(n_vertices)]
    for pair in edge_list:
        try:
            u, v = pair
        except (TypeError, ValueError) as exc:
            raise InputError(f"edge {pair!r} is not a vertex pair") from exc
        u, v = int(u), int(v)
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise InputError(
                f"edge ({u}, {v}) out of range for {n_vertices} vertices"
            )
        if u == v:
            loops[u] += 1
        else:
            mult[u][v] += 1
            mult[v][u] += 1
    return Multigraph(n_vertices, loops, mult)


# --- edge-list text format (the CLI's graph input) ---

def parse_edge_list_text(text: str) -> Multigraph:
    """Parse the text format: header ``n <count>``, then ``u v`` lines.

    ``u u`` denotes a loop, repeated lines accumulate multiplicity, ``#``
    starts a comment (whole-line or trailing).
    """
    n_vertices = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n_vertices is None:
            if len(fields) != 2 or fields[0] != "n":
                raise InputError(
                    f"line {lineno}: expected header 'n <vertex_count>', got {raw!r}"
                )
            try:
                n_vertices = int(fields[1])
            except ValueError as exc:
                raise InputError(f"line {lineno}: bad vertex count") from exc
            continue
        if len(fields) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError as exc:
            raise InputError(f"line {lineno}: bad vertex index") from exc
    if n_vertices is None:
        raise InputError("empty graph file (missing 'n <vertex_count>' header)")
    return build_multigraph(edges, n_vertices)


def format_edge_list(g: Multigraph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


# --- structural report ---

@dataclass(frozen=True)
class StructuralReport:
    connected: bool
    min_degree: int
    rank: int
    girth: int | None  # None means acyclic
    bipartite: bool


def structural_report(g: Multigraph) -> StructuralReport:
    """Connectivity, min degree, cycle rank, generalized girth, bipartiteness.

    Girth is 1 iff some loop exists, 2 iff loop-free with a parallel pair,
    else the shortest simple cycle length (None when acyclic). Bipartite
    means no odd closed walk: any loop kills it, parallel edges do not.
    """
    return StructuralReport(
        connected=_is_connected(g),
        min_degree=min(g.degrees()),
        rank=g.rank,
        girth=_girth(g),
        bipartite=_is_bipartite(g),
    )


def validate_zeta_input(g: Multigraph) -> None:
    """Enforce the standing hypotheses: connected with min degree >= 2."""
    if not _is_connected(g):
        raise GraphValidationError("graph is not connected")
    mindeg = min(g.degrees())
    if mindeg < 2:
        raise GraphValidationError(
            f"graph has a vertex of degree {mindeg}; min degree 2 required"
        )


def _is_connected(g: Multigraph) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.n


def _girth(g: Multigraph) -> int | None:
    if any(g.loops):
        return 1
    if any(g.mult[i][j] >= 2 for i in range(g.n) for j in range(i + 1, g.n)):
        return 2
    # Simple graph now: shortest cycle through each edge {u, v} is 1 plus
    # the shortest u-v path avoiding that edge; minimise over edges.
    best = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.mult[u][v]:
                continue
            dist = _bfs_distance_avoiding(g, u, v)
            if dist is not None and (best is None or dist + 1 < best):
                best = dist + 1
    return best


def _bfs_distance_avoiding(g: Multigraph, src: int, dst: int) -> int | None:
    """Shortest src-dst path length with the direct edge {src, dst} removed."""
    dist = {src: 0}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if {v, u} == {src, dst}:
                continue
            if u not in dist:
                dist[u] = dist[v] + 1
                if u == dst:
                    return dist[u]
                queue.append(u)
    return dist.get(dst)


def _is_bipartite(g: Multigraph) -> bool:
    if any(g.loops):
        return False
    color = {}
    for start in range(g.n):
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if u not in color:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


# --- matrices ---

def matrices(g: Multigraph):
    """(A, Q): adjacency with 2*loops on the diagonal, and Q = D - I."""
    n = g.n
    a = [[g.mult[i][j] for j in range(n)] for i in range(n)]
    for i in range(n):
        a[i][i] = 2 * g.loops[i]
    q = [[0] * n for _ in range(n)]
    for i in range(n):
        q[i][i] = g.degree(i) - 1
    return a, q


def kirchhoff_tree_count(g: Multigraph) -> int:
    """Spanning trees by the matrix-tree theorem (Laplacian cofactor).

    Loops are ignored (a tree cannot contain one); parallel edges count
    with multiplicity. Exact integer arithmetic throughout.
    """
    if not _is_connected(g):
        raise GraphValidationError("spanning trees need a connected graph")
    n = g.n
    if n == 1:
        return 1
    lap = [[-g.mult[i][j] for j in range(n)] for i in range(n)]
    for i in range(n):
        lap[i][i] = sum(g.mult[i])
    minor = [row[1:] for row in lap[1:]]
    return bareiss_int_det(minor)
