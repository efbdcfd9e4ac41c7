"""Bottom-up dynamic programming over a normalized decomposition.

Every node carries a table of rows.  A row's coloring classifies each bag
argument relative to the partial solutions the row stands for: ``in``
(member), ``def`` (attacked by the solution), ``att`` (attacks the
solution and is not attacked back, i.e. a still-open threat), ``out`` (no
interaction).  ``def`` wins over ``att`` because an attacker that is
counterattacked is no longer a threat.  Counts are exact big integers, so
counting needs no enumeration.  In preferred mode each row also carries
certificates: interface colorings of strictly larger partial solutions
that are compatible with the row's.  A root row without certificates is
maximal, hence preferred.  Certificate strictness is a property of the
underlying solution sets, not of the colorings - after a forget, a
certificate may collapse onto the row's own coloring and must be kept
(the witness still exists, it just looks the same on the interface).
For the same reason a join treats "the row itself" as a distinguished
non-strict companion instead of dumping it into the certificate set:
combinations are drawn from certificate x certificate, certificate x
self, and self x certificate, never self x self.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .af import ArgumentationFramework, _checked_argument
from .normalize import FORGET, INTRODUCE, JOIN, LEAF, NormalizedDecomposition, NormalNode

IN, DEF, ATT, OUT = 0, 1, 2, 3
COLOR_NAMES = ("in", "def", "att", "out")

Coloring = tuple[int, ...]


class MalformedDecompositionError(RuntimeError):
    """A traversal step hit a structural precondition violation."""


class DeadlineExceeded(Exception):
    """Cooperative watchdog deadline hit between traversal steps."""


class Row:
    """One table row: a coloring plus its solution count and trimmings."""

    __slots__ = ("coloring", "count", "flag", "certs", "origins")

    def __init__(self, coloring, count, flag, certs, origins):
        self.coloring: Coloring = coloring
        self.count: int = count
        self.flag: bool | None = flag  # contains-target, None when untracked
        self.certs: frozenset[Coloring] | None = certs  # None outside preferred mode
        self.origins: list[tuple] | None = origins  # derivation links, enumeration only

    def key(self) -> tuple:
        return (self.coloring, self.flag, self.certs)

    def __repr__(self) -> str:  # debugging aid
        colors = ",".join(COLOR_NAMES[c] for c in self.coloring)
        return f"Row([{colors}] x{self.count})"


@dataclass
class Table:
    bag: tuple[str, ...]  # sorted
    rows: dict[tuple, Row]


def _emit(rows: dict, coloring, count, flag, certs, origin, track_origins) -> None:
    key = (coloring, flag, certs)
    row = rows.get(key)
    if row is None:
        rows[key] = Row(coloring, count, flag, certs, [origin] if track_origins else None)
    else:
        row.count += count
        if track_origins:
            row.origins.append(origin)


def leaf_table(
    certificates: bool = False,
    target: str | None = None,
    origins: bool = False,
) -> Table:
    """The single empty row every leaf starts from."""
    flag = False if target is not None else None
    certs = frozenset() if certificates else None
    row = Row((), 1, flag, certs, [("leaf",)] if origins else None)
    return Table((), {row.key(): row})


def _in_mask(coloring: Coloring) -> int:
    mask = 0
    for i, c in enumerate(coloring):
        if c == IN:
            mask |= 1 << i
    return mask


def introduce_step(
    table: Table,
    vertex: str,
    af: ArgumentationFramework,
    target: str | None = None,
) -> Table:
    """Extend every row by the new bag argument, excluded and (when
    conflict-free) included."""
    if vertex in table.bag:
        raise MalformedDecompositionError(f"introduced vertex {vertex!r} already in bag")
    if vertex not in af.argument_set:
        raise MalformedDecompositionError(f"introduced vertex {vertex!r} unknown to the framework")
    bag = tuple(sorted(table.bag + (vertex,)))
    pos = bag.index(vertex)
    attacks = af.attacks
    hits_v = [i for i, a in enumerate(bag) if i != pos and (a, vertex) in attacks]
    hit_by_v = [i for i, a in enumerate(bag) if i != pos and (vertex, a) in attacks]
    hit_by_v_set = set(hit_by_v)
    hits_v_set = set(hits_v)
    self_attack = (vertex, vertex) in attacks

    def extend_out(coloring: Coloring) -> Coloring:
        ext = coloring[:pos] + (OUT,) + coloring[pos:]
        if any(ext[i] == IN for i in hits_v):
            color = DEF
        elif any(ext[i] == IN for i in hit_by_v):
            color = ATT
        else:
            color = OUT
        return ext[:pos] + (color,) + ext[pos + 1 :]

    def extend_in(coloring: Coloring) -> Coloring | None:
        if self_attack:
            return None
        ext = coloring[:pos] + (IN,) + coloring[pos:]
        new = []
        for i, c in enumerate(ext):
            if i == pos:
                new.append(IN)
            elif c == IN:
                if i in hits_v_set or i in hit_by_v_set:
                    return None  # conflict with the new member
                new.append(IN)
            elif c == DEF or i in hit_by_v_set:
                new.append(DEF)
            elif c == ATT or i in hits_v_set:
                new.append(ATT)
            else:
                new.append(OUT)
        return tuple(new)

    rows: dict[tuple, Row] = {}
    for row in table.rows.values():
        track = row.origins is not None
        out_coloring = extend_out(row.coloring)
        in_coloring = extend_in(row.coloring)
        if row.certs is None:
            out_certs = in_certs = None
        else:
            grown = set()
            for cert in row.certs:
                grown.add(extend_out(cert))
                cert_in = extend_in(cert)
                if cert_in is not None:
                    grown.add(cert_in)
            if in_coloring is not None:
                grown.add(in_coloring)  # the row's own in-extension: strictly larger
            out_certs = frozenset(grown)
            in_certs = frozenset(
                c for c in (extend_in(cert) for cert in row.certs) if c is not None
            )
        _emit(rows, out_coloring, row.count, row.flag, out_certs, ("intro", row, None), track)
        if in_coloring is not None:
            flag = row.flag if row.flag is None else (row.flag or vertex == target)
            _emit(rows, in_coloring, row.count, flag, in_certs, ("intro", row, vertex), track)
    return Table(bag, rows)


def forget_step(table: Table, vertex: str) -> Table:
    """Drop rows whose forgotten argument is an uncountered attacker, then
    project it away and merge rows that collide."""
    if vertex not in table.bag:
        raise MalformedDecompositionError(f"forgotten vertex {vertex!r} not in bag")
    pos = table.bag.index(vertex)
    bag = table.bag[:pos] + table.bag[pos + 1 :]
    rows: dict[tuple, Row] = {}
    for row in table.rows.values():
        if row.coloring[pos] == ATT:
            continue  # a pending attacker can never be countered from here on
        coloring = row.coloring[:pos] + row.coloring[pos + 1 :]
        certs = row.certs
        if certs is not None:
            certs = frozenset(
                c[:pos] + c[pos + 1 :] for c in certs if c[pos] != ATT
            )
        _emit(rows, coloring, row.count, row.flag, certs, ("chain", row), row.origins is not None)
    return Table(bag, rows)


def join_step(t1: Table, t2: Table) -> Table:
    """Pair rows that agree on the in-arguments; counts multiply."""
    if t1.bag != t2.bag:
        raise MalformedDecompositionError(f"join over unequal bags {t1.bag} / {t2.bag}")
    by_mask: dict[int, list[Row]] = {}
    for row in t2.rows.values():
        by_mask.setdefault(_in_mask(row.coloring), []).append(row)

    rows: dict[tuple, Row] = {}
    for row1 in t1.rows.values():
        mask = _in_mask(row1.coloring)
        for row2 in by_mask.get(mask, ()):
            c1, c2 = row1.coloring, row2.coloring
            combined = tuple(map(min, c1, c2))  # def < att < out for non-in
            flag = row1.flag if row1.flag is None else (row1.flag or row2.flag)
            certs = None
            if row1.certs is not None:
                grown = set()
                for d1 in row1.certs:
                    m1 = _in_mask(d1)
                    for d2 in row2.certs:
                        if m1 == _in_mask(d2):
                            grown.add(tuple(map(min, d1, d2)))
                    if m1 == mask:
                        grown.add(tuple(map(min, d1, c2)))
                for d2 in row2.certs:
                    if _in_mask(d2) == mask:
                        grown.add(tuple(map(min, c1, d2)))
                certs = frozenset(grown)
            _emit(
                rows,
                combined,
                row1.count * row2.count,
                flag,
                certs,
                ("join", row1, row2),
                row1.origins is not None,
            )
    return Table(t1.bag, rows)


def traverse(
    af: ArgumentationFramework,
    nd: NormalizedDecomposition,
    semantics: str = "admissible",
    target: str | None = None,
    origins: bool = False,
    deadline: float | None = None,
    node_hook: Callable[[NormalNode, Table], None] | None = None,
) -> Table:
    """Run the table computation bottom-up and return the root table.

    The root bag is empty, so the result has at most one row per
    flag/certificate combination; the admissible-set count is the sum of
    its counts.  ``deadline`` (a time.monotonic instant) is checked at
    every node boundary and raises DeadlineExceeded when passed.
    """
    if semantics not in ("admissible", "preferred"):
        raise ValueError(f"unknown semantics {semantics!r}")
    if target is not None:
        _checked_argument(af, target)
    certificates = semantics == "preferred"

    results: list[Table] = []
    stack: list[tuple[NormalNode, bool]] = [(nd.root, False)]
    while stack:
        node, ready = stack.pop()
        if not ready:
            stack.append((node, True))
            for child in reversed(node.children):
                stack.append((child, False))
            continue
        if deadline is not None and time.monotonic() > deadline:
            raise DeadlineExceeded
        if node.kind == LEAF:
            table = leaf_table(certificates, target, origins)
        elif node.kind == INTRODUCE:
            table = introduce_step(results.pop(), node.vertex, af, target)
        elif node.kind == FORGET:
            table = forget_step(results.pop(), node.vertex)
        elif node.kind == JOIN:
            right = results.pop()
            left = results.pop()
            table = join_step(left, right)
        else:
            raise MalformedDecompositionError(f"unknown node kind {node.kind!r}")
        if table.bag != node.bag:
            raise MalformedDecompositionError(
                f"computed bag {table.bag} differs from node bag {node.bag}"
            )
        if node_hook is not None:
            node_hook(node, table)
        results.append(table)
    return results.pop()


def _qualifying(table: Table, semantics: str) -> list[Row]:
    if semantics == "preferred":
        return [r for r in table.rows.values() if not r.certs]
    return list(table.rows.values())


def count_extensions(
    af: ArgumentationFramework,
    nd: NormalizedDecomposition,
    semantics: str,
    deadline: float | None = None,
) -> int:
    """Exact number of admissible sets / preferred extensions, from root
    counts alone."""
    table = traverse(af, nd, semantics, deadline=deadline)
    return sum(r.count for r in _qualifying(table, semantics))


def _materialize(row: Row, memo: dict[int, set[frozenset[str]]]) -> set[frozenset[str]]:
    stack = [row]
    while stack:
        top = stack[-1]
        if id(top) in memo:
            stack.pop()
            continue
        pending = [
            child
            for origin in top.origins
            for child in origin[1:]
            if isinstance(child, Row) and id(child) not in memo
        ]
        if pending:
            stack.extend(pending)
            continue
        acc: set[frozenset[str]] = set()
        for origin in top.origins:
            tag = origin[0]
            if tag == "leaf":
                acc.add(frozenset())
            elif tag == "intro":
                _, child, vertex = origin
                if vertex is None:
                    acc |= memo[id(child)]
                else:
                    acc.update(s | {vertex} for s in memo[id(child)])
            elif tag == "chain":
                acc |= memo[id(origin[1])]
            else:  # join
                _, left, right = origin
                acc.update(a | b for a in memo[id(left)] for b in memo[id(right)])
        memo[id(top)] = acc
        stack.pop()
    return memo[id(row)]


def enumerate_extensions(
    af: ArgumentationFramework,
    nd: NormalizedDecomposition,
    semantics: str,
    deadline: float | None = None,
) -> list[tuple[str, ...]]:
    """Materialize the extensions by traceback from the qualifying root
    rows; members and extensions come out lexicographically sorted."""
    table = traverse(af, nd, semantics, origins=True, deadline=deadline)
    memo: dict[int, set[frozenset[str]]] = {}
    found: set[frozenset[str]] = set()
    for row in _qualifying(table, semantics):
        found |= _materialize(row, memo)
    return sorted(tuple(sorted(ext)) for ext in found)


def decide_credulous(
    af: ArgumentationFramework,
    nd: NormalizedDecomposition,
    argument: str,
    deadline: float | None = None,
) -> bool:
    """Membership in some admissible set; identical to credulous acceptance
    under preferred semantics, at admissible-mode cost."""
    _checked_argument(af, argument)
    table = traverse(af, nd, "admissible", target=argument, deadline=deadline)
    return any(r.flag for r in table.rows.values())


def decide_skeptical(
    af: ArgumentationFramework,
    nd: NormalizedDecomposition,
    argument: str,
    deadline: float | None = None,
) -> bool:
    """Membership in every preferred extension."""
    _checked_argument(af, argument)
    table = traverse(af, nd, "preferred", target=argument, deadline=deadline)
    return all(r.flag for r in _qualifying(table, "preferred"))
