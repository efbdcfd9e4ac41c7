"""Normalization of tree decompositions.

A normalized decomposition contains only four node kinds: empty-bag
leaves, introduce nodes (one new bag member), forget nodes (one member
dropped), and joins (two children with bags equal to the join bag).  The
root bag is empty, so the final table aggregates over fully processed
solutions.  Bag differences between a node and its child are bridged by
forgetting first and introducing afterwards, one vertex per step, which
keeps the width of the input decomposition exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import DecompositionNode, PrimalGraph, TreeDecomposition, validate

LEAF = "leaf"
INTRODUCE = "introduce"
FORGET = "forget"
JOIN = "join"


@dataclass(frozen=True, eq=False)
class NormalNode:
    kind: str
    bag: tuple[str, ...]  # sorted
    vertex: str | None  # set for introduce/forget
    children: tuple["NormalNode", ...]


@dataclass(frozen=True, eq=False)
class NormalizedDecomposition:
    root: NormalNode

    def nodes(self) -> list[NormalNode]:
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

    @property
    def node_count(self) -> int:
        return len(self.nodes())

    def to_text(self) -> str:
        """Same layout as TreeDecomposition.to_text, with a kind prefix."""
        lines = []
        stack: list[tuple[NormalNode, int]] = [(self.root, 0)]
        while stack:
            node, depth = stack.pop()
            label = node.kind if node.vertex is None else f"{node.kind}({node.vertex})"
            bag = ",".join(node.bag)
            lines.append(f"{'  ' * depth}{label}: {{{bag}}}")
            for child in reversed(node.children):
                stack.append((child, depth + 1))
        return "\n".join(lines) + "\n"


def _check_occurrence_connectivity(dec: TreeDecomposition) -> None:
    # graph-independent part of decomposition validity; enough to make
    # the construction below sound
    vertices = frozenset().union(*(n.bag for n in dec.nodes()))
    pseudo = PrimalGraph(vertices, frozenset())
    broken = [v for v in validate(dec, pseudo) if "not connected" in v]
    if broken:
        raise ValueError(f"invalid decomposition: {broken[0]}")


def _introduce_chain(node: NormalNode, missing: list[str]) -> NormalNode:
    for v in sorted(missing):
        bag = tuple(sorted(node.bag + (v,)))
        node = NormalNode(INTRODUCE, bag, v, (node,))
    return node


def _forget_chain(node: NormalNode, extra: list[str]) -> NormalNode:
    for v in sorted(extra):
        bag = tuple(u for u in node.bag if u != v)
        node = NormalNode(FORGET, bag, v, (node,))
    return node


def _bridge(node: NormalNode, target: frozenset[str]) -> NormalNode:
    node = _forget_chain(node, [v for v in node.bag if v not in target])
    return _introduce_chain(node, [v for v in target if v not in node.bag])


def normalize(dec: TreeDecomposition) -> NormalizedDecomposition:
    """Rebuild the decomposition out of leaf/introduce/forget/join nodes.

    Each original leaf grows from an empty-bag leaf by introduce steps,
    each parent-child bag difference becomes a forget-then-introduce
    chain, nodes with several children turn into chained joins, and the
    root is forgotten down to an empty bag.
    """
    _check_occurrence_connectivity(dec)
    built: dict[int, NormalNode] = {}
    for node in reversed(dec.nodes()):  # children strictly before parents
        if not node.children:
            sub = NormalNode(LEAF, (), None, ())
            sub = _introduce_chain(sub, sorted(node.bag))
        else:
            bridged = [_bridge(built[id(c)], node.bag) for c in node.children]
            sub = bridged[0]
            for other in bridged[1:]:
                sub = NormalNode(JOIN, sub.bag, None, (sub, other))
        built[id(node)] = sub
    top = _forget_chain(built[id(dec.root)], list(built[id(dec.root)].bag))
    return NormalizedDecomposition(top)


def _as_tree_decomposition(nd: NormalizedDecomposition) -> TreeDecomposition:
    mirror: dict[int, DecompositionNode] = {}
    for i, node in enumerate(reversed(nd.nodes())):
        mirror[id(node)] = DecompositionNode(
            i, frozenset(node.bag), [mirror[id(c)] for c in node.children]
        )
    return TreeDecomposition(mirror[id(nd.root)])


def validate_normalized(nd: NormalizedDecomposition, g: PrimalGraph) -> list[str]:
    """Kind-specific invariants plus the three decomposition conditions."""
    violations = []
    nodes = nd.nodes()
    introduced = set()
    for node in nodes:
        bag = set(node.bag)
        if tuple(sorted(node.bag)) != node.bag:
            violations.append(f"bag of {node.kind} node is not sorted")
        if node.kind == LEAF:
            if node.children or bag:
                violations.append("leaf node with children or non-empty bag")
        elif node.kind == INTRODUCE:
            introduced.add(node.vertex)
            if len(node.children) != 1:
                violations.append("introduce node without exactly one child")
            else:
                child = set(node.children[0].bag)
                if node.vertex in child or bag != child | {node.vertex}:
                    violations.append(f"introduce({node.vertex}) does not add exactly one vertex")
        elif node.kind == FORGET:
            if len(node.children) != 1:
                violations.append("forget node without exactly one child")
            else:
                child = set(node.children[0].bag)
                if node.vertex not in child or bag != child - {node.vertex}:
                    violations.append(f"forget({node.vertex}) does not drop exactly one vertex")
        elif node.kind == JOIN:
            if len(node.children) != 2 or any(c.bag != node.bag for c in node.children):
                violations.append("join node without two equal-bag children")
        else:
            violations.append(f"unknown node kind {node.kind!r}")
    if nd.root.bag:
        violations.append("root bag is not empty")
    in_bags = set().union(*(set(n.bag) for n in nodes))
    for v in sorted(in_bags - introduced):
        violations.append(f"vertex {v} occurs in bags but is never introduced")
    violations.extend(validate(_as_tree_decomposition(nd), g))
    return violations
