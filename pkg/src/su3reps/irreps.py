"""Irreducible su(3) modules: dimensions, cumulative counts and the census.

An irreducible su(3) module is labelled by a Young diagram with row
lengths ``n1 >= n2 >= 0``.  Writing ``x = n1 + 2`` and ``y = n2 + 1`` its
dimension is ``x*y*(x - y)/2``.

Two independent routes to ``xi(d)`` (the number of irreps of dimension
exactly ``d``) are provided:

* :func:`count_irreps_upto` evaluates a closed-form sum over ``x`` for the
  number of irreps with dimension below a (half-)integer threshold, and
  :func:`xi` takes the difference at ``d + 1/2`` and ``d - 1/2``;
* :func:`xi_bruteforce` scans diagrams directly.

:func:`build_census` runs both and keeps the sweep as the trusted value.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Iterator, Mapping

log = logging.getLogger(__name__)

__all__ = [
    "YoungDiagram",
    "RealThreshold",
    "DimensionCensus",
    "weyl_dim",
    "diagrams_upto",
    "count_irreps_upto",
    "xi",
    "xi_bruteforce",
    "build_census",
]


@dataclass(frozen=True, order=True)
class YoungDiagram:
    """Row lengths ``(n1, n2)`` of an su(3) Young diagram."""

    n1: int
    n2: int

    def __post_init__(self):
        if not (0 <= self.n2 <= self.n1):
            raise ValueError(f"need 0 <= n2 <= n1, got ({self.n1}, {self.n2})")

    def conjugate(self) -> "YoungDiagram":
        return YoungDiagram(self.n1, self.n1 - self.n2)

    @property
    def is_self_conjugate(self) -> bool:
        return 2 * self.n2 == self.n1

    @property
    def dim(self) -> int:
        return _dim(self.n1, self.n2)


def _dim(n1: int, n2: int) -> int:
    return (n1 + 2) * (n2 + 1) * (n1 - n2 + 1) // 2


def weyl_dim(diagram: YoungDiagram | tuple[int, int]) -> int:
    """Dimension of the irreducible module with the given diagram.

    >>> weyl_dim((1, 0)), weyl_dim((2, 1))
    (3, 8)
    """
    if not isinstance(diagram, YoungDiagram):
        diagram = YoungDiagram(*diagram)
    return _dim(diagram.n1, diagram.n2)


def diagrams_upto(limit: int) -> Iterator[tuple[int, int, int]]:
    """Yield ``(n1, n2, dim)`` for every diagram with ``dim <= limit``.

    The smallest dimension for a given ``n1`` is reached at ``n2 = 0`` (or
    ``n2 = n1``), so the scan over ``n1`` stops once that exceeds the limit.
    """
    n1 = 0
    while (n1 + 2) * (n1 + 1) // 2 <= limit:
        for n2 in range(n1 + 1):
            d = _dim(n1, n2)
            if d <= limit:
                yield n1, n2, d
        n1 += 1


@dataclass(frozen=True)
class RealThreshold:
    """A threshold ``D`` that is an integer or half-integer, stored as ``2D``."""

    twice_value: int

    def __post_init__(self):
        if self.twice_value < 1:
            raise ValueError("threshold must be at least 1/2")

    @classmethod
    def of(cls, value: int | float | Fraction | str) -> "RealThreshold":
        twice = Fraction(value) * 2
        if twice.denominator != 1:
            raise ValueError(f"threshold {value!r} is not a multiple of 1/2")
        return cls(int(twice))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)


def _icbrt_below(m: int) -> int:
    """Largest integer ``k >= 0`` with ``k**3 < m`` (``m >= 1``)."""
    k = int(round(m ** (1 / 3)))
    while k > 0 and k**3 >= m:
        k -= 1
    while (k + 1) ** 3 < m:
        k += 1
    return k


def count_irreps_upto(threshold: RealThreshold | int | float | Fraction) -> int:
    """Number of irreducible su(3) modules with dimension strictly below ``D``.

    Counts pairs ``(x, y)`` with ``1 <= y <= x - 1`` and ``x*y*(x-y) < 2D``.
    All ``y`` are admitted for ``2 <= x <= l`` (``l`` the largest ``x`` whose
    smallest dimension ``x(x-1)/2`` is below ``D``), then the ``y`` in the
    window where the dimension reaches ``D`` are removed, for ``x > k``
    (``k`` the largest ``x`` with ``x**3 < 8D``; below it no ``y`` can reach
    ``D``).  Window edges come from the quadratic roots in floating point and
    are then corrected with exact integer comparisons.

    >>> count_irreps_upto(Fraction(7, 2))
    3
    """
    if not isinstance(threshold, RealThreshold):
        threshold = RealThreshold.of(threshold)
    t = threshold.twice_value

    l = (1 + math.isqrt(1 + 4 * t)) // 2
    while l > 1 and l * (l - 1) >= t:
        l -= 1
    while (l + 1) * l < t:
        l += 1
    k = _icbrt_below(4 * t)

    total = l * (l - 1) // 2
    for x in range(k + 1, l + 1):
        total -= _window_width(x, t)
    return total


def _window_width(x: int, t: int) -> int:
    """Count ``y`` in ``[1, x-1]`` with ``x*y*(x-y) >= t``.

    The admissible ``y`` form an interval symmetric about ``x/2``; only its
    upper edge is searched.
    """
    h = x // 2
    if x * h * (x - h) < t:
        return 0
    radicand = x * x - 4 * t / x
    if radicand >= 0:
        y = int((x + math.sqrt(radicand)) / 2)
        y = min(max(y, h), x - 1)
    else:
        # rounding put the root just out of reach; start from the peak
        y = h
    while y < x - 1 and x * (y + 1) * (x - y - 1) >= t:
        y += 1
    while x * y * (x - y) < t:
        y -= 1
    return 2 * y - x + 1


def xi(d: int) -> int:
    """Number of irreducible su(3) modules of dimension exactly ``d`` (closed form)."""
    if d < 1:
        raise ValueError("dimension must be positive")
    return count_irreps_upto(RealThreshold(2 * d + 1)) - count_irreps_upto(
        RealThreshold(2 * d - 1)
    )


def xi_bruteforce(d: int) -> int:
    """Number of irreducible su(3) modules of dimension ``d`` by scanning diagrams."""
    if d < 1:
        raise ValueError("dimension must be positive")
    count = 0
    n1 = 0
    while (n1 + 2) * (n1 + 1) // 2 <= d:
        for n2 in range(n1 + 1):
            if _dim(n1, n2) == d:
                count += 1
        n1 += 1
    return count


@dataclass(frozen=True)
class DimensionCensus:
    """Table ``d -> xi(d)`` for ``1 <= d <= limit``.

    ``counts`` holds every ``d`` in range, zeros included.  ``discrepancies``
    lists dimensions where the closed form disagreed with the sweep (the
    sweep value is what is stored).
    """

    limit: int
    counts: Mapping[int, int]
    discrepancies: tuple[int, ...] = field(default=())

    def __getitem__(self, d: int) -> int:
        if not 1 <= d <= self.limit:
            raise KeyError(d)
        return self.counts[d]

    def covers(self, d: int) -> bool:
        return d <= self.limit

    @property
    def support(self) -> tuple[int, ...]:
        """The achievable dimensions up to ``limit``, ascending."""
        return tuple(d for d in range(1, self.limit + 1) if self.counts[d])

    def total(self) -> int:
        return sum(self.counts.values())

    def rows(self) -> list[tuple[int, int]]:
        return [(d, c) for d, c in sorted(self.counts.items()) if c]


def build_census(limit: int, check: bool = True) -> DimensionCensus:
    """Tabulate ``xi`` up to ``limit`` with one diagram sweep.

    With ``check`` the closed form is evaluated at every half-integer up to
    ``limit + 1/2`` and compared against the sweep; disagreements are logged
    and recorded on the census, and the sweep value is kept.
    """
    if limit < 1:
        raise ValueError("census limit must be positive")
    counts = [0] * (limit + 1)
    for _, _, d in diagrams_upto(limit):
        counts[d] += 1

    bad: list[int] = []
    if check:
        prev = 0
        for d in range(1, limit + 1):
            cur = count_irreps_upto(RealThreshold(2 * d + 1))
            if cur - prev != counts[d]:
                log.warning(
                    "closed form gives xi(%d)=%d, sweep gives %d", d, cur - prev, counts[d]
                )
                bad.append(d)
            prev = cur

    return DimensionCensus(
        limit=limit,
        counts=MappingProxyType({d: counts[d] for d in range(1, limit + 1)}),
        discrepancies=tuple(bad),
    )
