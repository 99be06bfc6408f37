"""Exhaustive generation of small multigraphs, one per isomorphism class.

The engine-agreement sweep and the rank-two exhaustiveness audit both need
every connected multigraph of minimum degree two with a bounded edge count.
At that size (|E| <= 7, so |V| <= 7) brute force over multiplicity tables
is fine as long as the recursion prunes early; isomorphism reduction works
by taking the lexicographically least relabeling among the permutations
that respect the (degree, loop count) vertex partition.
"""

from __future__ import annotations

from collections import defaultdict, deque
from itertools import permutations, product

from .multigraph import Multigraph


def canonical_key(g: Multigraph) -> tuple:
    """Lexicographically least table encoding over admissible relabelings.

    Any isomorphism preserves each vertex's degree and loop count, so it
    suffices to permute within (degree, loops) classes; the minimum over
    those permutations is a complete isomorphism invariant.
    """
    groups = defaultdict(list)
    for v in range(g.n):
        groups[(g.degree(v), g.loops[v])].append(v)
    blocks = [groups[k] for k in sorted(groups)]
    best = None
    for choice in product(*[permutations(b) for b in blocks]):
        perm = [v for blk in choice for v in blk]
        loops = tuple(g.loops[perm[i]] for i in range(g.n))
        upper = tuple(
            g.mult[perm[i]][perm[j]]
            for i in range(g.n)
            for j in range(i + 1, g.n)
        )
        key = (g.n, loops, upper)
        if best is None or key < best:
            best = key
    return best


def is_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if sorted(g.loops) != sorted(h.loops):
        return False
    return canonical_key(g) == canonical_key(h)


def _connected(n, loops, mult) -> bool:
    if n == 1:
        return True
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w in range(n):
            if not seen[w] and mult[v][w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == n


def _labeled_tables(n, max_edges, min_degree):
    """Yield connected labeled Multigraphs on n vertices within the budget.

    Symmetry break: degrees must come out non-increasing along the vertex
    order, which every isomorphism class can satisfy. Rows are filled
    vertex by vertex; once row v closes, deg(v) is final, so both the
    min-degree bound and the ordering prune whole subtrees.
    """
    loops = [0] * n
    mult = [[0] * n for _ in range(n)]
    deg = [0] * n

    def close_row(v, budget):
        if deg[v] < min_degree:
            return False
        if v > 0 and deg[v] > deg[v - 1]:
            return False
        # Every remaining edge supplies at most 2 to the later vertices.
        need = sum(max(0, min_degree - deg[w]) for w in range(v + 1, n))
        return 2 * budget >= need

    def fill_cell(v, w, budget):
        # w == v means the loop cell; w > v the pair cell; w == n closes.
        if w == n:
            if close_row(v, budget):
                if v + 1 == n:
                    if _connected(n, loops, mult):
                        yield Multigraph(
                            n,
                            tuple(loops),
                            tuple(tuple(row) for row in mult),
                        )
                else:
                    yield from fill_cell(v + 1, v + 1, budget)
            return
        if w == v:
            for c in range(budget + 1):
                loops[v] = c
                deg[v] += 2 * c
                yield from fill_cell(v, w + 1, budget - c)
                deg[v] -= 2 * c
            loops[v] = 0
            return
        for c in range(budget + 1):
            mult[v][w] = mult[w][v] = c
            deg[v] += c
            deg[w] += c
            yield from fill_cell(v, w + 1, budget - c)
            deg[v] -= c
            deg[w] -= c
        mult[v][w] = mult[w][v] = 0

    yield from fill_cell(0, 0, max_edges)


def connected_multigraphs(max_edges: int, min_degree: int = 2):
    """All connected multigraphs with minimum degree >= min_degree and at
    most max_edges edges, one representative per isomorphism class.

    Order is deterministic: by edge count, then vertex count, then the
    canonical table key. Intended scale is max_edges <= 8; the table
    recursion gets expensive beyond that.
    """
    reps = {}
    for n in range(1, max_edges + 1):
        # min degree d forces 2|E| >= d*n, no point building wider tables
        if min_degree * n > 2 * max_edges:
            break
        for g in _labeled_tables(n, max_edges, min_degree):
            key = canonical_key(g)
            if key not in reps:
                reps[key] = g
    return [
        reps[key]
        for key in sorted(reps, key=lambda k: (sum(k[1]) + sum(k[2]), k))
    ]
