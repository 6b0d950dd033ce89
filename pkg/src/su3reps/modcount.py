"""Exact counts of (reducible) su(3) modules of a fixed total dimension.

A module of dimension ``D`` decomposes into irreducibles whose dimensions
form a partition of ``D`` with parts in the achievable set.  If part ``p``
appears ``m`` times and there are ``xi(p)`` irreps of that dimension, the
number of inequivalent ways to fill those ``m`` slots is the multiset
coefficient ``C(m + xi(p) - 1, m)``.  Summing the product over partitions
gives the total count; restricting to partitions with a part equal to 1
gives the modules that contain a singlet; grouping by the number of parts
gives the noiseless-subsystem size distribution.

Two routes are implemented and are expected to agree exactly:

``"enumerate"``
    stream the restricted partitions and sum the shape products;
``"gf"``
    read coefficients of ``prod_d (1 - y x**d) ** -xi(d)`` off a dynamic
    programming table (``x`` marks dimension, ``y`` marks component count).

Counts are Python ints; fractions are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Literal, Mapping

from .irreps import DimensionCensus
from .partitions import PartitionShape, PartSet, enumerate_restricted, to_shape

__all__ = [
    "InsufficientCensusError",
    "NssDistribution",
    "ModuleTable",
    "multiset_count",
    "shape_count",
    "census_parts",
    "component_counts",
    "mod_total",
    "mod_singlet",
    "singlet_fraction",
    "nss_distribution",
    "gf_table",
    "gf_oracle",
    "module_table",
]

Method = Literal["enumerate", "gf"]


class InsufficientCensusError(ValueError):
    """The census does not reach the dimension a computation needs."""


def _require(census: DimensionCensus, D: int) -> None:
    if D < 1:
        raise ValueError("dimension must be positive")
    if not census.covers(D):
        raise InsufficientCensusError(
            f"census stops at {census.limit}, dimension {D} requested"
        )


def multiset_count(n: int, k: int) -> int:
    """Number of size-``n`` multisets from ``k`` symbols, ``C(n + k - 1, n)``.

    >>> multiset_count(2, 2)
    3
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k == 0:
        return 1 if n == 0 else 0
    return math.comb(n + k - 1, n)


def shape_count(shape: PartitionShape, census: DimensionCensus) -> int:
    """Number of inequivalent modules whose irreducible dimensions form ``shape``."""
    result = 1
    for part, mult in shape:
        if not census.covers(part):
            raise InsufficientCensusError(
                f"census stops at {census.limit}, part {part} requested"
            )
        result *= multiset_count(mult, census.counts[part])
        if not result:
            return 0
    return result


def census_parts(census: DimensionCensus) -> PartSet:
    """The achievable irrep dimensions recorded in ``census``."""
    return PartSet(census.support)


def component_counts(
    D: int, census: DimensionCensus, parts: PartSet | None = None
) -> dict[int, int]:
    """Module counts of dimension ``D`` keyed by number of irreducible components.

    Enumeration route.  ``parts`` defaults to the full achievable set; pass a
    subset to count modules built only from those dimensions.  Components
    with zero count are omitted.
    """
    _require(census, D)
    if parts is None:
        parts = census_parts(census)
    counts: dict[int, int] = {}
    for p in enumerate_restricted(D, parts):
        c = shape_count(to_shape(p), census)
        if c:
            counts[len(p)] = counts.get(len(p), 0) + c
    return dict(sorted(counts.items()))


def gf_table(
    D_max: int, census: DimensionCensus, exclude: tuple[int, ...] = ()
) -> list[list[int]]:
    """Coefficient table ``T[n][N]`` of ``prod_d (1 - y x**d) ** -xi(d)``, ``n <= D_max``.

    ``T[n][N]`` is the number of modules of dimension ``n`` with ``N``
    irreducible components.  Each factor ``1/(1 - y x**d)`` is applied in
    place as ``T[n][N] += T[n-d][N-1]`` (ascending ``n``), ``xi(d)`` times;
    dimensions in ``exclude`` are skipped.
    """
    _require(census, D_max)
    T = [[0] * (n + 1) for n in range(D_max + 1)]
    T[0][0] = 1
    for d in census.support:
        if d > D_max or d in exclude:
            continue
        for _ in range(census.counts[d]):
            for n in range(d, D_max + 1):
                row, src = T[n], T[n - d]
                for N in range(1, len(src) + 1):
                    row[N] += src[N - 1]
    return T


def gf_oracle(D: int, census: DimensionCensus) -> dict[tuple[int, int], int]:
    """Nonzero cells ``(D, N) -> count`` of the generating-function table at dimension ``D``."""
    row = gf_table(D, census)[D]
    return {(D, N): c for N, c in enumerate(row) if c}


def mod_total(D: int, census: DimensionCensus, method: Method = "enumerate") -> int:
    """Total number of inequivalent su(3) modules of dimension ``D``."""
    _require(census, D)
    if method == "gf":
        return sum(gf_table(D, census)[D])
    if method == "enumerate":
        return sum(component_counts(D, census).values())
    raise ValueError(f"unknown method {method!r}")


def mod_singlet(
    D: int, census: DimensionCensus, method: Method = "enumerate", check: bool = True
) -> int:
    """Number of modules of dimension ``D`` that contain a one-dimensional summand.

    The enumeration route sums over partitions ending in 1 and, with
    ``check``, also computes the complement (total minus modules built
    without the trivial irrep) and insists the two agree.
    """
    _require(census, D)
    if method == "gf":
        with_one = gf_table(D, census)[D]
        without_one = gf_table(D, census, exclude=(1,))[D]
        return sum(with_one) - sum(without_one)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")

    parts = census_parts(census)
    direct = 0
    for p in enumerate_restricted(D, parts):
        if p[-1] == 1:
            direct += shape_count(to_shape(p), census)
    if check:
        total = sum(component_counts(D, census, parts).values())
        rest = sum(component_counts(D, census, parts.without(1)).values())
        if total - rest != direct:
            raise AssertionError(
                f"singlet count mismatch at D={D}: direct {direct}, complement {total - rest}"
            )
    return direct


def singlet_fraction(
    D: int, census: DimensionCensus, method: Method = "enumerate"
) -> Fraction:
    """Fraction of dimension-``D`` modules containing a singlet, in lowest terms."""
    return Fraction(mod_singlet(D, census, method), mod_total(D, census, method))


@dataclass(frozen=True)
class NssDistribution:
    """Exact distribution of the number ``N`` of irreducible components at dimension ``d``.

    ``counts[N]`` is the number of modules with exactly ``N`` components
    (only nonzero entries stored); ``weights[N] = counts[N] / total``.
    """

    d: int
    counts: Mapping[int, int]

    @cached_property
    def total(self) -> int:
        return sum(self.counts.values())

    @cached_property
    def weights(self) -> dict[int, Fraction]:
        return {N: Fraction(c, self.total) for N, c in sorted(self.counts.items())}

    def weight(self, N: int) -> Fraction:
        return self.weights.get(N, Fraction(0))

    def dense(self) -> list[Fraction]:
        """Weights for ``N = 1..d``, zeros included."""
        return [self.weight(N) for N in range(1, self.d + 1)]

    def mean(self) -> Fraction:
        return sum((N * w for N, w in self.weights.items()), Fraction(0))

    def variance(self) -> Fraction:
        m = self.mean()
        return sum(((N - m) ** 2 * w for N, w in self.weights.items()), Fraction(0))


def nss_distribution(
    d: int, census: DimensionCensus, method: Method = "enumerate"
) -> NssDistribution:
    _require(census, d)
    if method == "gf":
        row = gf_table(d, census)[d]
        counts = {N: c for N, c in enumerate(row) if c}
    elif method == "enumerate":
        counts = component_counts(d, census)
    else:
        raise ValueError(f"unknown method {method!r}")
    return NssDistribution(d, counts)


@dataclass(frozen=True)
class ModuleTable:
    """All counts for dimensions ``1..D_max`` from one pass of the fast route."""

    D_max: int
    components: tuple[tuple[int, ...], ...]  # components[D][N]
    singlet_counts: tuple[int, ...]  # singlet_counts[D]

    def total(self, D: int) -> int:
        return sum(self.components[D])

    def singlet(self, D: int) -> int:
        return self.singlet_counts[D]

    def fraction(self, D: int) -> Fraction:
        return Fraction(self.singlet(D), self.total(D))

    def distribution(self, d: int) -> NssDistribution:
        return NssDistribution(d, {N: c for N, c in enumerate(self.components[d]) if c})


def module_table(D_max: int, census: DimensionCensus) -> ModuleTable:
    full = gf_table(D_max, census)
    no_one = gf_table(D_max, census, exclude=(1,))
    return ModuleTable(
        D_max=D_max,
        components=tuple(tuple(row) for row in full),
        singlet_counts=tuple(sum(a) - sum(b) for a, b in zip(full, no_one)),
    )
