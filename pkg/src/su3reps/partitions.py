"""Integer partitions with parts drawn from a given set.

Partitions are plain tuples of positive integers in nonincreasing
("reverse lexicographic") order, e.g. ``(3, 1, 1, 1)``.  Their run-length
form, a *shape*, is a tuple of ``(part, multiplicity)`` pairs with parts
strictly decreasing, e.g. ``((3, 1), (1, 3))``.

:func:`enumerate_restricted` streams partitions whose parts lie in a
:class:`PartSet` without ever generating the unrestricted partitions.  The
recursion it realises is

    P_H(0, b) = {()}
    P_H(n, b) = union over l in H, l <= min(n, b) of  l v P_H(n - l, l)

where ``l v k`` prepends ``l`` to ``k``.  It is run as an explicit
depth-first walk so only the partition under construction is held in
memory.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from functools import lru_cache
from typing import Callable, Iterable, Iterator

__all__ = [
    "Partition",
    "PartitionShape",
    "PartSet",
    "prepend",
    "is_partition",
    "enumerate_restricted",
    "count_restricted",
    "count_partitions_exact",
    "hardy_ramanujan_estimate",
    "to_shape",
    "format_partition",
    "parse_partition",
]

Partition = tuple[int, ...]
PartitionShape = tuple[tuple[int, int], ...]


class PartSet:
    """An immutable set of allowed part sizes.

    Either a finite collection of positive integers, or a predicate over
    the positive integers (for infinite sets such as "all of them").
    """

    __slots__ = ("_members", "_predicate", "_name")

    def __init__(
        self,
        members: Iterable[int] | None = None,
        *,
        predicate: Callable[[int], bool] | None = None,
        name: str | None = None,
    ):
        if (members is None) == (predicate is None):
            raise ValueError("give exactly one of members or predicate")
        if members is not None:
            ms = tuple(sorted(set(members)))
            if ms and ms[0] < 1:
                raise ValueError("parts must be positive integers")
            self._members: tuple[int, ...] | None = ms
        else:
            self._members = None
        self._predicate = predicate
        self._name = name

    @classmethod
    def positive_integers(cls) -> "PartSet":
        return cls(predicate=lambda k: k >= 1, name="N+")

    def __contains__(self, k: object) -> bool:
        if not isinstance(k, int) or k < 1:
            return False
        if self._members is not None:
            i = bisect_right(self._members, k)
            return i > 0 and self._members[i - 1] == k
        return bool(self._predicate(k))

    def upto(self, n: int) -> tuple[int, ...]:
        """Members in ``[1, n]``, ascending."""
        if self._members is not None:
            return self._members[: bisect_right(self._members, n)]
        return tuple(k for k in range(1, n + 1) if self._predicate(k))

    def without(self, *parts: int) -> "PartSet":
        """Copy with the given members removed (finite sets only)."""
        if self._members is None:
            raise TypeError("cannot remove members from a predicate-defined set")
        drop = set(parts)
        return PartSet(m for m in self._members if m not in drop)

    @property
    def is_finite(self) -> bool:
        return self._members is not None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartSet):
            return NotImplemented
        if self._members is not None:
            return self._members == other._members
        return self is other

    def __hash__(self) -> int:
        return hash(self._members) if self._members is not None else id(self)

    def __repr__(self) -> str:
        if self._name:
            return f"PartSet({self._name})"
        if self._members is not None and len(self._members) > 8:
            head = ", ".join(map(str, self._members[:8]))
            return f"PartSet({{{head}, ...}})"
        return f"PartSet({set(self._members or ())!r})"


def prepend(part: int, kappa: Partition) -> Partition:
    """``part v kappa``; ``part`` must be at least the first part of ``kappa``."""
    if kappa and part < kappa[0]:
        raise ValueError(f"cannot prepend {part} to a partition starting with {kappa[0]}")
    if part < 1:
        raise ValueError("parts must be positive")
    return (part,) + tuple(kappa)


def is_partition(parts: Iterable[int], n: int | None = None) -> bool:
    parts = tuple(parts)
    if any(p < 1 for p in parts):
        return False
    if any(a < b for a, b in zip(parts, parts[1:])):
        return False
    return n is None or sum(parts) == n


def enumerate_restricted(
    n: int, parts: PartSet, max_part: int | None = None
) -> Iterator[Partition]:
    """Stream the partitions of ``n`` with parts in ``parts`` and no part above ``max_part``.

    Partitions come out in decreasing lexicographic order, so larger first
    parts first.  ``n == 0`` yields the empty partition once; an ``n`` with no
    admissible partition yields nothing.

    >>> list(enumerate_restricted(5, PartSet([1, 3, 6])))
    [(3, 1, 1), (1, 1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_part is None:
        max_part = n
    elif max_part < 1:
        raise ValueError("max_part must be positive")
    if n == 0:
        yield ()
        return

    allowed = parts.upto(min(n, max_part))[::-1]  # descending
    m = len(allowed)
    if m == 0:
        return

    stack: list[int] = []  # index into ``allowed`` of each chosen part
    rem = n
    start = 0
    while True:
        # extend greedily with the largest admissible part, never exceeding the previous one
        i = start
        while rem:
            while i < m and allowed[i] > rem:
                i += 1
            if i == m:
                break
            stack.append(i)
            rem -= allowed[i]
        if rem == 0:
            yield tuple(allowed[j] for j in stack)

        # backtrack to the deepest part that can be replaced by a smaller one
        while stack:
            j = stack.pop()
            rem += allowed[j]
            if j + 1 < m:
                start = j + 1
                break
        else:
            return


def count_restricted(n: int, parts: PartSet, max_part: int | None = None) -> int:
    """Number of partitions :func:`enumerate_restricted` would yield, without enumerating.

    Table over ``(remaining, largest allowed part index)``; the standard
    coin-change recurrence.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_part is None:
        max_part = n
    allowed = parts.upto(min(n, max_part))
    ways = [1] + [0] * n
    for p in allowed:
        for s in range(p, n + 1):
            ways[s] += ways[s - p]
    return ways[n]


@lru_cache(maxsize=8)
def _partition_numbers(n: int) -> tuple[int, ...]:
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return tuple(p)


def count_partitions_exact(n: int) -> int:
    """Unrestricted partition number ``p(n)`` via Euler's pentagonal recurrence.

    >>> count_partitions_exact(6)
    11
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _partition_numbers(n)[n]


def hardy_ramanujan_estimate(n: int) -> float:
    """Leading Hardy-Ramanujan asymptotic ``exp(pi*sqrt(2n/3)) / (4*n*sqrt(3))``."""
    if n < 1:
        raise ValueError("n must be positive")
    return math.exp(math.pi * math.sqrt(2 * n / 3)) / (4 * n * math.sqrt(3))


def to_shape(p: Partition) -> PartitionShape:
    """Run-length encode a partition: ``(3, 1, 1, 1) -> ((3, 1), (1, 3))``."""
    shape: list[tuple[int, int]] = []
    for part in p:
        if shape and shape[-1][0] == part:
            shape[-1] = (part, shape[-1][1] + 1)
        else:
            shape.append((part, 1))
    return tuple(shape)


def format_partition(p: Partition) -> str:
    return "+".join(map(str, p))


def parse_partition(line: str) -> Partition:
    line = line.strip()
    if not line:
        return ()
    return tuple(int(tok) for tok in line.split("+"))
