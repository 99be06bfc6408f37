"""The three zeta-reciprocal engines and the oriented line graph they share.

For a connected multigraph with min degree 2, the reciprocal of the Ihara
zeta function is a polynomial of degree exactly 2|E|. Three independent
computations of it live here:

* zeta_bass:     (1 - u^2)^(r-1) * det(I - Au + Qu^2), r = |E| - |V| + 1;
* zeta_line_det: det(I - uT) with T the arc matrix of the oriented line
                 graph on the 2|E| directed edges;
* zeta_enum:     signed exhaustive count of vertex-disjoint directed-cycle
                 packings (linear subgraphs) of the oriented line graph,
                 one coefficient per packing size.

The first two run in polynomial time; the enumeration engine is an
exponential oracle capped by the number of directed edges. Their exact
agreement on every small multigraph is the package's core acceptance test.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from .errors import ConsistencyError, SizeCapError, VerificationError
from .intpoly import IntPoly
from .multigraph import (
    Multigraph,
    matrices,
    structural_report,
    validate_zeta_input,
)
from .polydet import det_poly_matrix

# int64 is provably safe for the enumeration DP up to this many line-graph
# vertices (partial-structure counts are below n! * n << 2^63); beyond it
# the pure-Python big-integer pass takes over.
_NUMPY_DP_LIMIT = 16

DEFAULT_ENUM_CAP = 16


# --- oriented line graph ---

@dataclass(frozen=True)
class OrientedLineDigraph:
    """Directed graph on the 2|E| directed edges of a multigraph.

    Vertex i is a directed edge with origin[i], terminus[i], a parent
    undirected edge id, and a flag for which of the two orientations it is;
    inverse[i] is the opposite orientation of the same parent edge. There
    is an arc i -> j exactly when j is not the inverse of i and
    terminus(j) = origin(i); consecutive non-backtracking pairs, with arcs
    recorded backward relative to walk order. The determinant downstream is
    transpose-invariant, so the recording direction carries no content.
    """

    n: int
    origin: tuple
    terminus: tuple
    edge_id: tuple
    is_reversed: tuple
    inverse: tuple
    arcs: tuple  # dense 0/1 rows

    def out_neighbors(self, i: int):
        return [j for j in range(self.n) if self.arcs[i][j]]

    def arc_matrix(self):
        return [list(row) for row in self.arcs]


def oriented_line_graph(g: Multigraph) -> OrientedLineDigraph:
    """Build the oriented line graph, extended to loops and parallel edges.

    Each non-loop edge yields two mutually inverse directed edges. Each
    loop yields two directed self-edges at its vertex, declared mutual
    inverses: a loop may be traversed repeatedly in the same rotational
    sense (self-arc) but cannot immediately reverse. Parallel edges give
    distinct vertices with edge-matched inverses, so leaving by one copy
    and returning by another is not a backtrack.
    """
    validate_zeta_input(g)
    origin, terminus, edge_id, is_rev, inverse = [], [], [], [], []
    for eid, (u, v) in enumerate(g.edge_list()):
        origin.extend((u, v))
        terminus.extend((v, u))
        edge_id.extend((eid, eid))
        is_rev.extend((False, True))
        inverse.extend((2 * eid + 1, 2 * eid))
    n = len(origin)
    arcs = [
        tuple(
            1 if (inverse[i] != j and terminus[j] == origin[i]) else 0
            for j in range(n)
        )
        for i in range(n)
    ]
    return OrientedLineDigraph(
        n=n,
        origin=tuple(origin),
        terminus=tuple(terminus),
        edge_id=tuple(edge_id),
        is_reversed=tuple(is_rev),
        inverse=tuple(inverse),
        arcs=tuple(arcs),
    )


# --- reports ---

@dataclass(frozen=True)
class ZetaReport:
    """A zeta reciprocal plus the invariants read off from it."""

    poly: IntPoly
    engine: str
    edge_count: int

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def leading_coeff(self) -> int:
        return self.poly.leading_coeff

    @property
    def girth_readout(self) -> int:
        """Index of the first nonzero coefficient after the constant term."""
        k = self.poly.first_nonzero_power(start=1)
        if k is None:
            raise ConsistencyError("zeta reciprocal has no nonconstant term")
        return k

    @property
    def even(self) -> bool:
        return self.poly.is_even()


def _make_report(poly: IntPoly, engine: str, g: Multigraph) -> ZetaReport:
    e = g.edge_count
    if poly.degree != 2 * e:
        raise ConsistencyError(
            f"{engine}: degree {poly.degree} != 2|E| = {2 * e}"
        )
    if poly.coeff(0) != 1:
        raise ConsistencyError(f"{engine}: constant term {poly.coeff(0)} != 1")
    return ZetaReport(poly=poly, engine=engine, edge_count=e)


# --- engine A: three-term determinant ---

def zeta_bass(g: Multigraph, strategy: str = "interp") -> ZetaReport:
    """(1 - u^2)^(r-1) * det(I - Au + Qu^2), all exact."""
    validate_zeta_input(g)
    a, q = matrices(g)
    n = g.n
    m = [
        [
            IntPoly((1 if i == j else 0, -a[i][j], q[i][j] if i == j else 0))
            for j in range(n)
        ]
        for i in range(n)
    ]
    det = det_poly_matrix(m, degree_bound=2 * n, strategy=strategy)
    poly = det * (IntPoly((1, 0, -1)) ** (g.rank - 1))
    return _make_report(poly, "bass", g)


# --- engine B: line-graph determinant ---

def zeta_line_det(g: Multigraph, strategy: str = "interp") -> ZetaReport:
    """det(I - uT) over the oriented line graph."""
    olg = oriented_line_graph(g)
    m = [
        [
            IntPoly((1 if i == j else 0, -olg.arcs[i][j]))
            for j in range(olg.n)
        ]
        for i in range(olg.n)
    ]
    det = det_poly_matrix(m, degree_bound=olg.n, strategy=strategy)
    return _make_report(det, "linedet", g)


# --- engine C: linear-subgraph enumeration ---

def zeta_enum(g: Multigraph, cap: int = DEFAULT_ENUM_CAP) -> ZetaReport:
    """Coefficients as signed counts of directed-cycle packings.

    c_k sums (-1)^(number of cycles) over all vertex-disjoint unions of
    directed cycles covering exactly k line-graph vertices; c_0 = 1. The
    cap bounds the number of line-graph vertices (2|E|); exceeding it is a
    SizeCapError, an intentional scale limit rather than a failure.
    """
    olg = oriented_line_graph(g)
    if olg.n > cap:
        raise SizeCapError(
            f"enumeration engine capped at {cap} line-graph vertices, "
            f"this graph has {olg.n}"
        )
    coeffs = _packing_coefficients(olg)
    return _make_report(IntPoly(coeffs), "enum", g)


def _packing_coefficients(olg: OrientedLineDigraph):
    """[c_0 .. c_n] by dynamic programming over (support mask, endpoint).

    States are partial packings: a set of finished cycles plus one open
    path, built in decreasing order of cycle anchors (anchor = smallest
    vertex of a cycle), so each packing is produced exactly once. The open
    path's anchor is always the lowest bit of the support mask. Finishing
    a cycle flips the sign; the signed totals per support size are the
    coefficients.
    """
    n = olg.n
    if n <= _NUMPY_DP_LIMIT:
        c = _dp_int64(n, olg.arcs)
    else:
        c = _dp_bigint(n, olg.arcs)
    c[0] = 1
    return c


def _dp_int64(n: int, arcs):
    t = np.array(arcs, dtype=np.int64)
    size = 1 << n
    f = np.zeros((size, n), dtype=np.int64)
    bits = (1 << np.arange(n)).astype(np.int64)
    idx = np.arange(n)
    c = [0] * (n + 1)
    for a in range(n):
        f[1 << a, a] = 1
    for mask in range(1, size):
        active = f[mask]
        if not active.any():
            continue
        anchor = (mask & -mask).bit_length() - 1
        closed = -int(active @ t[:, anchor])
        if closed:
            c[bin(mask).count("1")] += closed
            for a2 in range(anchor):
                f[mask | (1 << a2), a2] += closed
        ext = active @ t
        allowed = (ext != 0) & ((mask & bits) == 0) & (idx > anchor)
        js = np.nonzero(allowed)[0]
        if js.size:
            f[mask | bits[js], js] += ext[js]
    return c


def _dp_bigint(n: int, arcs):
    out_arcs = [[x for x in range(n) if arcs[w][x]] for w in range(n)]
    c = [0] * (n + 1)
    layer: dict[int, dict[int, int]] = {}
    for a in range(n):
        layer[1 << a] = {a: 1}
    k = 1
    while layer:
        nxt: dict[int, dict[int, int]] = {}
        for mask, endpoints in layer.items():
            anchor = (mask & -mask).bit_length() - 1
            closed = 0
            for w, cnt in endpoints.items():
                if arcs[w][anchor]:
                    closed -= cnt
                for x in out_arcs[w]:
                    if x > anchor and not (mask >> x) & 1:
                        dest = nxt.setdefault(mask | (1 << x), {})
                        dest[x] = dest.get(x, 0) + cnt
            if closed:
                c[k] += closed
                for a2 in range(anchor):
                    dest = nxt.setdefault(mask | (1 << a2), {})
                    dest[a2] = dest.get(a2, 0) + closed
        layer = nxt
        k += 1
    return c


# --- explicit census for the contribution-table audits ---

def enumerate_directed_cycles(olg: OrientedLineDigraph):
    """All simple directed cycles as (vertex mask, length), anchored at
    their smallest vertex. Exponential in general; meant for the sparse
    line graphs of the contribution-table checks."""
    n = olg.n
    out_arcs = [olg.out_neighbors(w) for w in range(n)]
    cycles = []

    def walk(anchor, w, mask, length):
        for x in out_arcs[w]:
            if x == anchor:
                cycles.append((mask, length))
            elif x > anchor and not (mask >> x) & 1:
                walk(anchor, x, mask | (1 << x), length + 1)

    for a in range(n):
        walk(a, a, 1 << a, 1)
    return cycles


def linear_subgraph_census(olg: OrientedLineDigraph):
    """Occurrence counts {(k, r): count} over all linear subgraphs.

    k is the number of line-graph vertices covered and r the number of
    cycles; c_k = sum_r (-1)^r * count[(k, r)]. This is a second,
    structurally different enumeration (explicit cycles, then disjoint
    packing) used to audit the coefficient tables.
    """
    cycles = enumerate_directed_cycles(olg)
    census: dict[tuple[int, int], int] = {}

    def pack(start, used, k, r):
        for i in range(start, len(cycles)):
            mask, length = cycles[i]
            if not mask & used:
                key = (k + length, r + 1)
                census[key] = census.get(key, 0) + 1
                pack(i + 1, used | mask, k + length, r + 1)

    pack(0, 0, 0, 0)
    return census


def census_coefficient(census, k: int) -> int:
    """c_k recovered from a census table (k >= 1)."""
    return sum(
        (-1 if r % 2 else 1) * cnt
        for (kk, r), cnt in census.items()
        if kk == k
    )


# --- polynomial-level invariant checks ---

@dataclass(frozen=True)
class InvariantCheck:
    leading_coeff: int
    expected_leading: int
    girth_readout: int
    structural_girth: int
    even: bool
    bipartite: bool


def poly_invariants(poly: IntPoly, g: Multigraph) -> InvariantCheck:
    """Check the three polynomial-level readouts against graph structure.

    Leading coefficient must be (-1)^(|E|-|V|) * prod(d(v) - 1); the first
    nonzero coefficient after c_0 must sit at the (generalized) girth; the
    polynomial is even iff the graph is bipartite. Any mismatch raises
    VerificationError naming the failed check.
    """
    e = g.edge_count
    report = structural_report(g)
    expected_leading = (-1) ** (e - g.n) * prod(d - 1 for d in g.degrees())
    if poly.degree != 2 * e:
        raise VerificationError(
            f"degree check failed: {poly.degree} != 2|E| = {2 * e}"
        )
    if poly.leading_coeff != expected_leading:
        raise VerificationError(
            "leading-coefficient check failed: "
            f"{poly.leading_coeff} != {expected_leading}"
        )
    readout = poly.first_nonzero_power(start=1)
    if report.girth is None or readout != report.girth:
        raise VerificationError(
            f"girth readout check failed: first nonzero power {readout}, "
            f"structural girth {report.girth}"
        )
    if poly.is_even() != report.bipartite:
        raise VerificationError(
            f"evenness check failed: even={poly.is_even()}, "
            f"bipartite={report.bipartite}"
        )
    return InvariantCheck(
        leading_coeff=poly.leading_coeff,
        expected_leading=expected_leading,
        girth_readout=readout,
        structural_girth=report.girth,
        even=poly.is_even(),
        bipartite=report.bipartite,
    )
