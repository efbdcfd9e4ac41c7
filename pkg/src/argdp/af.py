"""Argumentation frameworks and the basic acceptability notions.

A framework is a finite set of arguments plus a directed attack relation.
A set of arguments is conflict-free when no member attacks a member,
admissible when it is conflict-free and counterattacks every attacker of
a member, and a preferred extension when it is a subset-maximal admissible
set.  All objects here are immutable and the functions pure, so everything
is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


class UnknownArgumentError(ValueError):
    """An argument identifier that does not belong to the framework."""


class CapacityError(ValueError):
    """Exhaustive enumeration requested on a framework that is too large."""


@dataclass(frozen=True)
class ArgumentationFramework:
    """Arguments (lexicographically sorted, unique) and attack pairs.

    Self-attacks are allowed; a self-attacker simply never belongs to any
    conflict-free set.
    """

    arguments: tuple[str, ...]
    attacks: frozenset[tuple[str, str]]

    def __post_init__(self) -> None:
        seen = set(self.arguments)
        if len(seen) != len(self.arguments):
            raise ValueError("duplicate argument identifiers")
        for src, dst in self.attacks:
            if src not in seen:
                raise UnknownArgumentError(f"attack source {src!r} is not an argument")
            if dst not in seen:
                raise UnknownArgumentError(f"attack target {dst!r} is not an argument")

    @classmethod
    def of(
        cls,
        arguments: Iterable[str],
        attacks: Iterable[tuple[str, str]] = (),
    ) -> "ArgumentationFramework":
        """Build a framework, sorting and deduplicating both components."""
        return cls(
            tuple(sorted(set(arguments))),
            frozenset((src, dst) for src, dst in attacks),
        )

    @cached_property
    def argument_set(self) -> frozenset[str]:
        return frozenset(self.arguments)

    @cached_property
    def attackers(self) -> dict[str, frozenset[str]]:
        """For each argument, the set of arguments attacking it."""
        acc: dict[str, set[str]] = {a: set() for a in self.arguments}
        for src, dst in self.attacks:
            acc[dst].add(src)
        return {a: frozenset(s) for a, s in acc.items()}

    @cached_property
    def targets(self) -> dict[str, frozenset[str]]:
        """For each argument, the set of arguments it attacks."""
        acc: dict[str, set[str]] = {a: set() for a in self.arguments}
        for src, dst in self.attacks:
            acc[src].add(dst)
        return {a: frozenset(s) for a, s in acc.items()}


def _checked_members(af: ArgumentationFramework, members: Iterable[str]) -> frozenset[str]:
    s = frozenset(members)
    unknown = s - af.argument_set
    if unknown:
        raise UnknownArgumentError(f"unknown argument {min(unknown)!r}")
    return s


def _checked_argument(af: ArgumentationFramework, argument: str) -> str:
    if argument not in af.argument_set:
        raise UnknownArgumentError(f"unknown argument {argument!r}")
    return argument


def is_conflict_free(af: ArgumentationFramework, members: Iterable[str]) -> bool:
    """True iff no member attacks a member (covers self-attacks)."""
    s = _checked_members(af, members)
    return not any((a, b) in af.attacks for a in s for b in s)


def is_defended(af: ArgumentationFramework, members: Iterable[str], argument: str) -> bool:
    """True iff every attacker of `argument` is attacked by some member."""
    s = _checked_members(af, members)
    _checked_argument(af, argument)
    for attacker in af.attackers[argument]:
        if not any((c, attacker) in af.attacks for c in s):
            return False
    return True


def is_admissible(af: ArgumentationFramework, members: Iterable[str]) -> bool:
    """True iff the set is conflict-free and defends each of its members."""
    s = _checked_members(af, members)
    return is_conflict_free(af, s) and all(is_defended(af, s, a) for a in s)
