"""Tree decompositions of the undirected attack graph.

Decompositions are built by bucket elimination along a vertex order
produced by greedy heuristics (min-fill, min-degree, maximum cardinality
search).  Tie-breaking is seeded; seed 0 means deterministic
lexicographic tie-breaks, which keeps golden tests and benchmarks
reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .af import ArgumentationFramework

HEURISTICS = ("min-fill", "min-degree", "mcs")


@dataclass(frozen=True)
class PrimalGraph:
    """Undirected shadow of the attack digraph; self-loops are dropped."""

    vertices: frozenset[str]
    edges: frozenset[tuple[str, str]]  # endpoints sorted, no self-loops

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop on {u!r}")
            if u > v:
                raise ValueError(f"edge {(u, v)!r} not in sorted order")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge {(u, v)!r} leaves the vertex set")

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def primal_graph(af: ArgumentationFramework) -> PrimalGraph:
    """Vertices are the arguments; every attack between distinct arguments
    becomes an undirected edge."""
    edges = frozenset(
        (min(a, b), max(a, b)) for a, b in af.attacks if a != b
    )
    return PrimalGraph(af.argument_set, edges)


@dataclass
class DecompositionNode:
    id: int
    bag: frozenset[str]
    children: list["DecompositionNode"] = field(default_factory=list)


@dataclass
class TreeDecomposition:
    root: DecompositionNode

    def nodes(self) -> list[DecompositionNode]:
        """All nodes in preorder (iterative; decompositions can be deep)."""
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            out.append(node)
            stack.extend(reversed(node.children))
        return out

    @property
    def width(self) -> int:
        return max(len(node.bag) for node in self.nodes()) - 1

    def to_text(self) -> str:
        """One node per line: ``<depth*2 spaces><id>: {v1,v2,...}``."""
        lines = []
        stack: list[tuple[DecompositionNode, int]] = [(self.root, 0)]
        while stack:
            node, depth = stack.pop()
            bag = ",".join(sorted(node.bag))
            lines.append(f"{'  ' * depth}{node.id}: {{{bag}}}")
            for child in reversed(node.children):
                stack.append((child, depth + 1))
        return "\n".join(lines) + "\n"


def _pick(candidates: list[str], rng: random.Random | None) -> str:
    # candidates holds every vertex achieving the best score
    if rng is None:
        return min(candidates)
    return rng.choice(sorted(candidates))


def _eliminate(adj: dict[str, set[str]], v: str) -> None:
    neighbors = adj.pop(v)
    for u in neighbors:
        adj[u].discard(v)
    for u, w in combinations(neighbors, 2):
        adj[u].add(w)
        adj[w].add(u)


def _fill_count(adj: dict[str, set[str]], v: str) -> int:
    neighbors = adj[v]
    return sum(1 for u, w in combinations(neighbors, 2) if w not in adj[u])


def _order_min_degree(adj: dict[str, set[str]], rng: random.Random | None) -> list[str]:
    order = []
    while adj:
        best = min(len(n) for n in adj.values())
        candidates = [v for v, n in adj.items() if len(n) == best]
        v = _pick(candidates, rng)
        order.append(v)
        _eliminate(adj, v)
    return order


def _order_min_fill(adj: dict[str, set[str]], rng: random.Random | None) -> list[str]:
    fill = {v: _fill_count(adj, v) for v in adj}
    order = []
    while adj:
        best = min(fill.values())
        candidates = [v for v, f in fill.items() if f == best]
        v = _pick(candidates, rng)
        order.append(v)
        # fill counts only change inside the 2-neighborhood of v
        affected = set(adj[v])
        for u in adj[v]:
            affected |= adj[u]
        affected.discard(v)
        _eliminate(adj, v)
        del fill[v]
        for u in affected:
            if u in adj:
                fill[u] = _fill_count(adj, u)
    return order


def _order_mcs(adj: dict[str, set[str]], rng: random.Random | None) -> list[str]:
    # construction order by maximum count of already-ordered neighbors,
    # reversed to give an elimination order
    weight = {v: 0 for v in adj}
    construction = []
    remaining = set(adj)
    while remaining:
        best = max(weight[v] for v in remaining)
        candidates = [v for v in remaining if weight[v] == best]
        v = _pick(candidates, rng)
        construction.append(v)
        remaining.discard(v)
        for u in adj[v]:
            if u in remaining:
                weight[u] += 1
    return construction[::-1]


def elimination_order(g: PrimalGraph, heuristic: str, seed: int = 0) -> list[str]:
    """A permutation of the vertices chosen greedily by the heuristic."""
    if heuristic not in HEURISTICS:
        raise ValueError(f"unknown heuristic {heuristic!r}, expected one of {HEURISTICS}")
    rng = random.Random(seed) if seed != 0 else None
    adj = g.adjacency()
    if heuristic == "min-degree":
        return _order_min_degree(adj, rng)
    if heuristic == "min-fill":
        return _order_min_fill(adj, rng)
    return _order_mcs(adj, rng)


def decompose(g: PrimalGraph, order: Iterable[str]) -> TreeDecomposition:
    """Bucket elimination: eliminating v creates a node with bag
    {v} + current neighbors, attached under the node of v's
    earliest-eliminated remaining neighbor.

    A disconnected graph yields one such tree per component; the extra
    component roots are attached below the overall root (bags are disjoint
    there, so all decomposition conditions survive).  An empty graph gives
    a single empty-bag node.
    """
    seq = list(order)
    if sorted(seq) != sorted(g.vertices):
        raise ValueError("order is not a permutation of the graph's vertices")
    if not seq:
        return TreeDecomposition(DecompositionNode(0, frozenset()))

    adj = g.adjacency()
    position = {v: i for i, v in enumerate(seq)}
    bags: list[frozenset[str]] = []
    for v in seq:
        bags.append(frozenset(adj[v] | {v}))
        _eliminate(adj, v)

    nodes = [DecompositionNode(i, bag) for i, bag in enumerate(bags)]
    roots = []
    for i, v in enumerate(seq):
        rest = bags[i] - {v}
        if rest:
            parent = min(rest, key=position.__getitem__)
            nodes[position[parent]].children.append(nodes[i])
        else:
            roots.append(nodes[i])
    root = roots[-1]  # the last eliminated vertex always ends a component
    for extra in roots[:-1]:
        root.children.append(extra)
    return TreeDecomposition(root)


def validate(dec: TreeDecomposition, g: PrimalGraph) -> list[str]:
    """Check cover, occurrence connectedness, and edge coverage.

    Returns one description per violated condition, naming a witness;
    empty means the decomposition is valid for g.
    """
    violations = []
    nodes = dec.nodes()
    parent: dict[int, DecompositionNode | None] = {id(dec.root): None}
    for node in nodes:
        for child in node.children:
            parent[id(child)] = node

    occurrences: dict[str, list[DecompositionNode]] = {}
    for node in nodes:
        for v in node.bag:
            occurrences.setdefault(v, []).append(node)

    covered = set(occurrences)
    for v in sorted(g.vertices - covered):
        violations.append(f"vertex {v} appears in no bag")
    for v in sorted(covered - g.vertices):
        violations.append(f"bag member {v} is not a graph vertex")

    for u, v in sorted(g.edges):
        if not any(u in node.bag and v in node.bag for node in nodes):
            violations.append(f"edge {{{u},{v}}} is contained in no bag")

    for v in sorted(occurrences):
        holding = occurrences[v]
        if len(holding) <= 1:
            continue
        member = {id(n) for n in holding}
        seen = {id(holding[0])}
        frontier = [holding[0]]
        while frontier:
            node = frontier.pop()
            adjacent = list(node.children)
            if parent[id(node)] is not None:
                adjacent.append(parent[id(node)])
            for other in adjacent:
                if id(other) in member and id(other) not in seen:
                    seen.add(id(other))
                    frontier.append(other)
        if len(seen) != len(member):
            violations.append(f"occurrences of vertex {v} are not connected")
    return violations
