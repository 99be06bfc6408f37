"""Tests for the oriented line graph and the three zeta-reciprocal engines."""

from __future__ import annotations

import pytest

from iharazeta.errors import (
    ConsistencyError,
    GraphValidationError,
    SizeCapError,
    VerificationError,
)
from iharazeta.intpoly import IntPoly
from iharazeta.multigraph import build_multigraph
from iharazeta.polydet import det_poly_matrix
from iharazeta.zeta import (
    ZetaReport,
    _dp_bigint,
    _dp_int64,
    census_coefficient,
    enumerate_directed_cycles,
    linear_subgraph_census,
    oriented_line_graph,
    poly_invariants,
    zeta_bass,
    zeta_enum,
    zeta_line_det,
)


def cycle(n):
    return build_multigraph([(i, (i + 1) % n) for i in range(n)], n)


def complete(n):
    return build_multigraph(
        [(i, j) for i in range(n) for j in range(i + 1, n)], n
    )


def two_cycles_joined(m, n):
    """Cycles of lengths m and n sharing the single vertex 0."""
    edges = []
    verts = list(range(m))
    edges += [(verts[i], verts[(i + 1) % m]) for i in range(m)]
    verts = [0] + list(range(m, m + n - 1))
    edges += [(verts[i], verts[(i + 1) % n]) for i in range(n)]
    return build_multigraph(edges, m + n - 1)


TRIPLE_EDGE = build_multigraph([(0, 1), (0, 1), (0, 1)], 2)


# --- oriented line graph ---

def test_line_graph_size_and_inverse_involution():
    for g in (cycle(3), TRIPLE_EDGE, two_cycles_joined(1, 3), complete(4)):
        olg = oriented_line_graph(g)
        assert olg.n == 2 * g.edge_count
        for i in range(olg.n):
            j = olg.inverse[i]
            assert j != i
            assert olg.inverse[j] == i
            assert olg.edge_id[j] == olg.edge_id[i]
            assert olg.is_reversed[j] != olg.is_reversed[i]
            assert olg.origin[j] == olg.terminus[i]
            assert olg.terminus[j] == olg.origin[i]
            # no backtracking in either recording direction
            assert olg.arcs[i][j] == 0 and olg.arcs[j][i] == 0


def test_line_graph_degrees_follow_endpoint_degrees():
    for g in (cycle(4), TRIPLE_EDGE, two_cycles_joined(3, 4), complete(4)):
        olg = oriented_line_graph(g)
        for i in range(olg.n):
            out = sum(olg.arcs[i])
            into = sum(olg.arcs[j][i] for j in range(olg.n))
            assert out == g.degree(olg.origin[i]) - 1
            assert into == g.degree(olg.terminus[i]) - 1


def test_line_graph_degree_signature_of_joined_cycles():
    # cycles of lengths 3 and 4 sharing one vertex of degree 4
    olg = oriented_line_graph(two_cycles_joined(3, 4))
    assert olg.n == 14
    sig = {}
    for i in range(olg.n):
        out = sum(olg.arcs[i])
        into = sum(olg.arcs[j][i] for j in range(olg.n))
        sig[(out, into)] = sig.get((out, into), 0) + 1
    assert sig == {(3, 1): 4, (1, 3): 4, (1, 1): 6}


def test_loop_gives_two_self_arcs():
    olg = oriented_line_graph(build_multigraph([(0, 0)], 1))
    assert olg.n == 2
    assert olg.arcs == ((1, 0), (0, 1))


def test_bigon_line_graph_cycles():
    # two parallel edges: leaving by one copy and returning by the other is
    # a legal closed walk, so the line digraph has two disjoint 2-cycles
    olg = oriented_line_graph(build_multigraph([(0, 1), (0, 1)], 2))
    cycles = sorted(enumerate_directed_cycles(olg))
    assert cycles == [(0b0110, 2), (0b1001, 2)]
    assert linear_subgraph_census(olg) == {(2, 1): 2, (4, 2): 1}


def test_arc_matrix_transpose_gives_same_determinant():
    g = two_cycles_joined(3, 4)
    olg = oriented_line_graph(g)
    n = olg.n
    m = [
        [IntPoly((1 if i == j else 0, -olg.arcs[j][i])) for j in range(n)]
        for i in range(n)
    ]
    assert det_poly_matrix(m, degree_bound=n) == zeta_line_det(g).poly


# --- frozen values ---

def test_cycle_fixtures():
    for n in range(1, 6):
        expected = (IntPoly.one() - IntPoly.monomial(n)) ** 2
        for engine in (zeta_bass, zeta_line_det, zeta_enum):
            assert engine(cycle(n)).poly == expected


def test_triangle_literal():
    assert zeta_bass(cycle(3)).poly == IntPoly((1, 0, 0, -2, 0, 0, 1))


def test_figure_eight_literal():
    g = build_multigraph([(0, 0), (0, 0)], 1)
    expected = IntPoly((1, -4, 2, 4, -3))
    for engine in (zeta_bass, zeta_line_det, zeta_enum):
        assert engine(g).poly == expected


def test_triple_edge_literal():
    expected = IntPoly((1, 0, -6, 0, 9, 0, -4))
    for engine in (zeta_bass, zeta_line_det, zeta_enum):
        assert engine(TRIPLE_EDGE).poly == expected


def test_report_metadata():
    rep = zeta_bass(cycle(4))
    assert rep.engine == "bass"
    assert rep.edge_count == 4
    assert rep.degree == 8
    assert rep.leading_coeff == 1
    assert rep.girth_readout == 4
    assert rep.even


def test_girth_readout_needs_a_nonconstant_term():
    rep = ZetaReport(poly=IntPoly((1,)), engine="stub", edge_count=0)
    with pytest.raises(ConsistencyError):
        rep.girth_readout


# --- engine agreement ---

def test_engines_agree_on_small_sweep(sweep7):
    for g in sweep7:
        if g.edge_count > 4:
            continue
        a = zeta_bass(g).poly
        assert zeta_line_det(g).poly == a
        assert zeta_enum(g).poly == a


def test_ring_strategy_matches_interp(sweep7):
    for g in sweep7:
        if g.edge_count > 3:
            continue
        assert zeta_bass(g, strategy="ring").poly == zeta_bass(g).poly
        assert zeta_line_det(g, strategy="ring").poly == zeta_line_det(g).poly


def test_engines_validate_input():
    path = build_multigraph([(0, 1), (1, 2)], 3)
    split = build_multigraph([(0, 1), (0, 1), (2, 3), (2, 3)], 4)
    for engine in (zeta_bass, zeta_line_det, zeta_enum):
        with pytest.raises(GraphValidationError):
            engine(path)
        with pytest.raises(GraphValidationError):
            engine(split)


# --- enumeration engine internals ---

def test_triangle_line_graph_census():
    census = linear_subgraph_census(oriented_line_graph(cycle(3)))
    assert census == {(3, 1): 2, (6, 2): 1}
    assert census_coefficient(census, 3) == -2
    assert census_coefficient(census, 6) == 1
    assert census_coefficient(census, 4) == 0


def test_census_reproduces_enum_coefficients(sweep7):
    for g in sweep7:
        if g.edge_count > 4:
            continue
        census = linear_subgraph_census(oriented_line_graph(g))
        poly = zeta_enum(g).poly
        for k in range(1, 2 * g.edge_count + 1):
            assert census_coefficient(census, k) == poly.coeff(k)


def test_dp_paths_agree_across_the_int64_boundary():
    arcs = oriented_line_graph(two_cycles_joined(3, 4)).arcs
    assert _dp_int64(14, arcs) == _dp_bigint(14, arcs)


def test_enum_beyond_int64_limit():
    g = two_cycles_joined(4, 5)  # 18 directed edges, above the int64 cutoff
    assert zeta_enum(g, cap=18).poly == zeta_bass(g).poly


def test_size_cap():
    with pytest.raises(SizeCapError, match="20"):
        zeta_enum(complete(5))
    with pytest.raises(SizeCapError):
        zeta_enum(cycle(3), cap=5)
    assert zeta_enum(cycle(3), cap=6).poly == zeta_bass(cycle(3)).poly


# --- polynomial-level invariants ---

def test_poly_invariants_pass_on_engine_output():
    check = poly_invariants(zeta_bass(TRIPLE_EDGE).poly, TRIPLE_EDGE)
    assert check.leading_coeff == check.expected_leading == -4
    assert check.girth_readout == check.structural_girth == 2
    assert check.even and check.bipartite


def test_poly_invariants_name_the_failed_check():
    g = cycle(4)
    poly_invariants(zeta_bass(g).poly, g)  # 1 - 2u^4 + u^8 passes
    with pytest.raises(VerificationError, match="degree"):
        poly_invariants(IntPoly((1, 0, 0, 0, -1)), g)
    with pytest.raises(VerificationError, match="leading-coefficient"):
        poly_invariants(IntPoly((1, 0, 0, 0, -2, 0, 0, 0, 2)), g)
    with pytest.raises(VerificationError, match="girth"):
        poly_invariants(IntPoly((1, 0, -2, 0, 0, 0, 0, 0, 1)), g)
    with pytest.raises(VerificationError, match="evenness"):
        poly_invariants(IntPoly((1, 0, 0, 0, -2, 1, 0, 0, 1)), g)
