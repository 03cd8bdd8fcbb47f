"""Exact homomorphism existence, retraction search, and core testing.

The search engine is backtracking over per-vertex candidate bitsets with
arc-consistency propagation after every assignment. When the target graph
carries cyclic or dihedral labels, its (verified) translation symmetries
collapse the root branching to one candidate per orbit; correctness never
relies on an unverified symmetry. A negative answer is only ever reported
after a completed exhaustive search, and every positive answer is passed
through the independent checker `verify_homomorphism` first.
"""

from __future__ import annotations

import hashlib
import json
from collections import deque
from dataclasses import dataclass

from . import dihedral as dih
from .budget import BudgetClock, BudgetExhausted, SearchBudget, resolve_budget
from .graphs import Graph, cartesian_product, induced_subgraph, iter_bits
from .labels import CyclicElem


@dataclass(frozen=True)
class Homomorphism:
    source_order: int
    target_order: int
    mapping: tuple[int, ...]
    verified: bool = False

    def image(self) -> set[int]:
        return set(self.mapping)

    @property
    def surjective(self) -> bool:
        return len(self.image()) == self.target_order


@dataclass(frozen=True)
class SolveOutcome:
    status: str  # "found" | "none" | "exhausted"
    homomorphism: Homomorphism | None
    nodes: int
    seconds: float

    @property
    def found(self) -> bool:
        return self.status == "found"


def verify_homomorphism(g: Graph, h: Graph, mapping) -> bool:
    """Independent edge-preservation check, no shortcuts shared with the search."""
    if len(mapping) != g.order:
        return False
    if any(not 0 <= m < h.order for m in mapping):
        return False
    for u in range(g.order):
        for v in iter_bits(g.adj[u]):
            if v > u and not h.has_edge(mapping[u], mapping[v]):
                return False
    return True


def _run_search(g: Graph, h: Graph, doms: list[int], clock: BudgetClock):
    """Return a mapping tuple or None. doms is consumed."""
    n = g.order
    if any(d == 0 for d in doms):
        return None
    nbrs = [list(iter_bits(g.adj[u])) for u in range(n)]
    tadj = h.adj

    def enforce(doms: list[int], seeds) -> bool:
        queue = deque((w, u) for u in seeds for w in nbrs[u])
        while queue:
            u, v = queue.popleft()
            du, dv = doms[u], doms[v]
            new = du
            for a in iter_bits(du):
                if not tadj[a] & dv:
                    new &= ~(1 << a)
            if new != du:
                if not new:
                    return False
                doms[u] = new
                for w in nbrs[u]:
                    if w != v:
                        queue.append((w, u))
        return True

    if not enforce(doms, range(n)):
        return None

    def dfs(doms: list[int]):
        clock.tick()
        best = -1
        best_count = 1 << 62
        for u in range(n):
            c = doms[u].bit_count()
            if 1 < c < best_count:
                best, best_count = u, c
        if best < 0:
            # arc consistency with all-singleton domains is a solution
            return tuple(d.bit_length() - 1 for d in doms)
        for a in iter_bits(doms[best]):
            clock.tick()
            child = doms.copy()
            child[best] = 1 << a
            if enforce(child, (best,)):
                result = dfs(child)
                if result is not None:
                    return result
        return None

    return dfs(doms)


def _is_automorphism(h: Graph, perm) -> bool:
    if sorted(perm) != list(range(h.order)):
        return False
    for u in range(h.order):
        for v in iter_bits(h.adj[u]):
            if not h.has_edge(perm[u], perm[v]):
                return False
    return True


def symmetry_root_candidates(h: Graph) -> int | None:
    """Bitmask with one target vertex per orbit of the label-declared
    translation symmetries, or None when no usable labels are present.

    Each candidate symmetry is verified to be an automorphism before use.
    """
    labels = h.labels
    if not labels or h.order == 0:
        return None
    perms = []
    first = labels[0]
    if isinstance(first, CyclicElem):
        n = first.modulus
        if n != h.order or not all(
            isinstance(l, CyclicElem) and l.modulus == n for l in labels
        ):
            return None
        index = {lab: i for i, lab in enumerate(labels)}
        try:
            perms.append(
                [index[CyclicElem((lab.value + 1) % n, n)] for lab in labels]
            )
        except KeyError:
            return None
    elif isinstance(first, dih.DihedralElement):
        n = first.n
        if not all(isinstance(l, dih.DihedralElement) and l.n == n for l in labels):
            return None
        index = {lab: i for i, lab in enumerate(labels)}
        for gen in (dih.rotation(1, n), dih.rho(1, n)):
            try:
                perms.append([index[dih.compose(gen, lab)] for lab in labels])
            except KeyError:
                return None
    else:
        return None
    for perm in perms:
        if not _is_automorphism(h, perm):
            return None

    parent = list(range(h.order))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in perms:
        for u, v in enumerate(perm):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    reps = 0
    for u in range(h.order):
        if find(u) == u:
            reps |= 1 << u
    return reps


def find_homomorphism(
    g: Graph,
    h: Graph,
    budget: SearchBudget | None = None,
    *,
    fixed: dict[int, int] | None = None,
    exclude_image=(),
    use_target_symmetry: bool = True,
) -> SolveOutcome:
    """Decide whether an edge-preserving map g -> h exists.

    `fixed` pins chosen source vertices to chosen targets (retractions);
    `exclude_image` bans target vertices outright (core testing). Both
    disable the root symmetry reduction.
    """
    clock = resolve_budget(budget).start()
    full = (1 << h.order) - 1
    for x in exclude_image:
        full &= ~(1 << x)
    doms = [full] * g.order
    if fixed:
        for u, a in fixed.items():
            doms[u] &= 1 << a
    elif use_target_symmetry and not exclude_image and g.order:
        reps = symmetry_root_candidates(h)
        if reps is not None:
            root = max(range(g.order), key=lambda u: (g.degree(u), -u))
            doms[root] &= reps
    try:
        mapping = _run_search(g, h, doms, clock)
    except BudgetExhausted as stop:
        return SolveOutcome("exhausted", None, stop.nodes, clock.elapsed())
    if mapping is None:
        return SolveOutcome("none", None, clock.nodes, clock.elapsed())
    if not verify_homomorphism(g, h, mapping):
        raise RuntimeError("search produced a map the independent checker rejects")
    hom = Homomorphism(g.order, h.order, mapping, verified=True)
    return SolveOutcome("found", hom, clock.nodes, clock.elapsed())


def find_retraction(g: Graph, keep, budget: SearchBudget | None = None) -> SolveOutcome:
    """Search for a homomorphism of g onto the subgraph induced by `keep`
    that fixes every kept vertex. Mapping values index the induced subgraph."""
    kept = tuple(sorted(set(keep)))
    if not kept or kept[0] < 0 or kept[-1] >= g.order:
        raise ValueError(f"keep set {kept} invalid for order {g.order}")
    h = induced_subgraph(g, kept)
    fixed = {v: i for i, v in enumerate(kept)}
    outcome = find_homomorphism(g, h, budget, fixed=fixed, use_target_symmetry=False)
    if outcome.found:
        mapping = outcome.homomorphism.mapping
        if any(mapping[v] != i for v, i in fixed.items()):
            raise RuntimeError("retraction search violated a fixed point")
    return outcome


@dataclass(frozen=True)
class CoreOutcome:
    status: str  # "core" | "not-core" | "exhausted"
    witness: Homomorphism | None
    nodes: int
    seconds: float

    @property
    def is_core(self) -> bool:
        return self.status == "core"


def is_core(g: Graph, budget: SearchBudget | None = None) -> CoreOutcome:
    """Exhaustively decide whether every endomorphism of g is surjective.

    g fails to be a core exactly when some endomorphism misses a vertex,
    so we try to avoid each vertex in turn.
    """
    total_nodes = 0
    seconds = 0.0
    for v in range(g.order):
        outcome = find_homomorphism(
            g, g, budget, exclude_image=(v,), use_target_symmetry=False
        )
        total_nodes += outcome.nodes
        seconds += outcome.seconds
        if outcome.status == "found":
            return CoreOutcome("not-core", outcome.homomorphism, total_nodes, seconds)
        if outcome.status == "exhausted":
            return CoreOutcome("exhausted", None, total_nodes, seconds)
    return CoreOutcome("core", None, total_nodes, seconds)


def normal_cayley_self_hom(g: Graph) -> Homomorphism:
    """The verified group-addition homomorphism from g box g onto a circulant g.

    Sends the product vertex (u, v) to u + v mod n. Residue addition always
    works on a circulant, so a verification failure is an internal defect.
    """
    labels = g.labels
    n = g.order
    if not labels or not all(
        isinstance(l, CyclicElem) and l.modulus == n for l in labels
    ):
        raise ValueError("group addition needs a circulant with residue labels")
    if any(l.value != i for i, l in enumerate(labels)):
        raise ValueError("circulant labels out of residue order")
    square = cartesian_product(g, g)
    mapping = []
    for la, lb in square.labels:
        mapping.append((la.value + lb.value) % n)
    mapping = tuple(mapping)
    if not verify_homomorphism(square, g, mapping):
        raise RuntimeError("group addition failed the homomorphism checker")
    return Homomorphism(square.order, n, mapping, verified=True)


# certificates


def graph_fingerprint(g: Graph) -> dict:
    blob = repr((g.order, g.adj)).encode()
    return {
        "order": g.order,
        "edges": g.edge_count,
        "digest": hashlib.sha256(blob).hexdigest()[:16],
    }


def certificate(
    kind: str,
    *,
    data,
    source: Graph | None = None,
    target: Graph | None = None,
    verified: bool = False,
    nodes: int = 0,
    seconds: float = 0.0,
) -> dict:
    """JSON-ready certificate; `data` is the map, coloring, or clique."""
    if kind not in ("homomorphism", "coloring", "clique"):
        raise ValueError(f"unknown certificate kind {kind!r}")
    payload_key = "map" if kind == "homomorphism" else kind
    cert = {
        "kind": kind,
        payload_key: list(data),
        "verified": bool(verified),
        "nodes": int(nodes),
        "seconds": float(seconds),
    }
    if source is not None:
        cert["source"] = graph_fingerprint(source)
    if target is not None:
        cert["target"] = graph_fingerprint(target)
    return cert


def check_certificate(cert: dict, g: Graph, h: Graph | None = None) -> bool:
    """Re-check a loaded certificate against graphs, without re-searching."""
    kind = cert["kind"]
    data = cert["map" if kind == "homomorphism" else kind]
    if "source" in cert and cert["source"]["digest"] != graph_fingerprint(g)["digest"]:
        return False
    if kind == "homomorphism":
        if h is None:
            return False
        if "target" in cert and cert["target"]["digest"] != graph_fingerprint(h)["digest"]:
            return False
        return verify_homomorphism(g, h, data)
    if kind == "coloring":
        if len(data) != g.order:
            return False
        return all(
            data[u] != data[v] for u in range(g.order) for v in iter_bits(g.adj[u])
        )
    # clique
    return all(
        g.has_edge(u, v) for i, u in enumerate(data) for v in data[i + 1 :]
    )


def certificate_dumps(cert: dict) -> str:
    return json.dumps(cert, sort_keys=True)


def certificate_loads(text: str) -> dict:
    return json.loads(text)
