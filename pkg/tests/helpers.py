"""Independent oracles used to cross-check the solvers.

Everything here is deliberately written along different lines than the
package code: plain recursion without propagation, direct subset sweeps,
gap arithmetic instead of pairwise distances. A disagreement means a bug.
"""

from __future__ import annotations

from itertools import combinations

from kneser_lab.graphs import Graph, make_graph


def brute_homomorphism_exists(g: Graph, h: Graph) -> bool:
    """Naive backtracking in vertex order, no ordering heuristics, no pruning
    beyond checking edges into the already-assigned prefix."""
    n = g.order
    assign = [-1] * n

    def extend(u: int) -> bool:
        if u == n:
            return True
        for w in range(h.order):
            ok = True
            for v in range(u):
                if g.has_edge(u, v) and not h.has_edge(w, assign[v]):
                    ok = False
                    break
            if ok:
                assign[u] = w
                if extend(u + 1):
                    return True
                assign[u] = -1
        return False

    if n == 0:
        return True
    return extend(0)


def brute_independence_number(g: Graph) -> int:
    """Largest independent set by sweeping subset sizes from the top."""
    for size in range(g.order, 0, -1):
        for sub in combinations(range(g.order), size):
            if all(not g.has_edge(u, v) for i, u in enumerate(sub) for v in sub[i + 1 :]):
                return size
    return 0


def brute_clique_number(g: Graph) -> int:
    for size in range(g.order, 0, -1):
        for sub in combinations(range(g.order), size):
            if all(g.has_edge(u, v) for i, u in enumerate(sub) for v in sub[i + 1 :]):
                return size
    return 0


def brute_chromatic_number(g: Graph) -> int:
    """Smallest k admitting a proper coloring, tried by exhaustive assignment."""

    def colorable(k: int) -> bool:
        colors = [-1] * g.order

        def go(u: int) -> bool:
            if u == g.order:
                return True
            for c in range(k):
                if all(not (g.has_edge(u, v) and colors[v] == c) for v in range(u)):
                    colors[u] = c
                    if go(u + 1):
                        return True
                    colors[u] = -1
            return False

        return go(0)

    if g.order == 0:
        return 0
    k = 1
    while not colorable(k):
        k += 1
    return k


def stable_subsets_by_gaps(n: int, k: int, s: int) -> set[tuple[int, ...]]:
    """s-stable k-subsets of [n] selected by their circular gap vector."""
    out = set()
    for els in combinations(range(1, n + 1), k):
        gaps = [b - a for a, b in zip(els, els[1:])]
        gaps.append(els[0] + n - els[-1])
        if all(gap >= s for gap in gaps):
            out.add(els)
    return out


def random_graph(rng, order: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(order)
        for v in range(u + 1, order)
        if rng.random() < p
    ]
    return make_graph(order, edges)


def pairwise_distances(g: Graph) -> list[list[int]]:
    """Floyd-Warshall, as a second opinion against the BFS in the package."""
    big = g.order + 1
    dist = [[0 if u == v else (1 if g.has_edge(u, v) else big) for v in range(g.order)] for u in range(g.order)]
    for m in range(g.order):
        for u in range(g.order):
            for v in range(g.order):
                alt = dist[u][m] + dist[m][v]
                if alt < dist[u][v]:
                    dist[u][v] = alt
    return dist
