"""Exhaustive ground truth for small frameworks.

Enumerates all 2^n subsets with bitmask arithmetic.  This is a test
oracle, not a solving path, hence the hard size guard: anything larger
than SUBSET_LIMIT arguments is rejected instead of silently crawling.
"""

from __future__ import annotations

from .af import ArgumentationFramework, CapacityError, _checked_argument

SUBSET_LIMIT = 25


def _guard(af: ArgumentationFramework) -> int:
    n = len(af.arguments)
    if n > SUBSET_LIMIT:
        raise CapacityError(
            f"subset enumeration limited to {SUBSET_LIMIT} arguments, got {n}"
        )
    return n


def _admissible_masks(af: ArgumentationFramework) -> list[int]:
    n = _guard(af)
    index = {a: i for i, a in enumerate(af.arguments)}
    hits = [0] * n  # hits[i]: mask of arguments that argument i attacks
    hit_by = [0] * n  # hit_by[i]: mask of arguments attacking argument i
    for src, dst in af.attacks:
        hits[index[src]] |= 1 << index[dst]
        hit_by[index[dst]] |= 1 << index[src]

    result = []
    for mask in range(1 << n):
        attacked = 0
        ok = True
        rest = mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            if hits[i] & mask:  # attacks a member (or itself)
                ok = False
                break
            attacked |= hits[i]
            rest ^= low
        if not ok:
            continue
        rest = mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            if hit_by[i] & ~attacked:  # some attacker is not counterattacked
                ok = False
                break
            rest ^= low
        if ok:
            result.append(mask)
    return result


def _to_set(af: ArgumentationFramework, mask: int) -> frozenset[str]:
    return frozenset(a for i, a in enumerate(af.arguments) if mask >> i & 1)


def admissible_sets(af: ArgumentationFramework) -> set[frozenset[str]]:
    """All admissible sets, by exhaustive subset enumeration."""
    return {_to_set(af, m) for m in _admissible_masks(af)}


def preferred_extensions(af: ArgumentationFramework) -> set[frozenset[str]]:
    """The subset-maximal admissible sets."""
    masks = sorted(_admissible_masks(af), key=lambda m: -bin(m).count("1"))
    maximal: list[int] = []
    for m in masks:
        if not any(m != t and m & t == m for t in maximal):
            maximal.append(m)
    return {_to_set(af, m) for m in maximal}


def is_credulous(af: ArgumentationFramework, argument: str) -> bool:
    """True iff some preferred extension (equivalently some admissible set)
    contains the argument."""
    _checked_argument(af, argument)
    bit = 1 << af.arguments.index(argument)
    return any(m & bit for m in _admissible_masks(af))


def is_skeptical(af: ArgumentationFramework, argument: str) -> bool:
    """True iff every preferred extension contains the argument."""
    _checked_argument(af, argument)
    return all(argument in ext for ext in preferred_extensions(af))
