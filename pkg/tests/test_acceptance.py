"""Acceptance gate: one test per exit criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are
written straight to the terminal.
"""

import gc
import time
import tracemalloc
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest

from su3reps.fitstats import (
    SeriesPoints,
    fit_growth,
    fit_invbeta,
    growth_model,
    mod_series,
    peak_location,
    singlet_series,
)
from su3reps.irreps import build_census, xi, xi_bruteforce
from su3reps.modcount import (
    census_parts,
    component_counts,
    gf_table,
    mod_singlet,
    mod_total,
    module_table,
    singlet_fraction,
)
from su3reps.partitions import (
    PartSet,
    count_partitions_exact,
    count_restricted,
    enumerate_restricted,
)


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, title, budget=None):
        t0 = time.perf_counter()
        try:
            yield
            elapsed = time.perf_counter() - t0
            if budget is not None:
                assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"
        except BaseException as err:
            with capsys.disabled():
                print(f"\n[FAIL] {number:>2}. {title}: {err}")
            raise
        with capsys.disabled():
            print(f"\n[PASS] {number:>2}. {title} ({elapsed:.2f}s)")

    return run


def test_01_paper_values(criterion):
    with criterion(1, "Mod/Mod1 at D=5,6 exact", budget=1.0):
        census = build_census(10)
        assert mod_total(6, census) == 8
        assert mod_singlet(6, census) == 3
        assert singlet_fraction(6, census) == Fraction(3, 8)
        assert mod_total(5, census) == 3
        assert mod_singlet(5, census) == 3
        assert singlet_fraction(5, census) == 1


def test_02_census_oracle(criterion):
    with criterion(2, "closed-form xi equals diagram enumeration for d <= 5000", budget=30.0):
        census = build_census(5000, check=True)
        assert census.discrepancies == ()
        for d in range(1, 5001):
            closed = xi(d)
            assert closed == xi_bruteforce(d) == census.counts[d], d
        assert xi(2) == xi(4) == xi(5) == 0
        assert census.support[:7] == (1, 3, 6, 8, 10, 15, 21)


def test_03_partition_oracle(criterion):
    with criterion(3, "unrestricted enumeration equals Euler p(n) for n <= 60", budget=60.0):
        everything = PartSet.positive_integers()
        assert count_partitions_exact(6) == 11
        for n in range(61):
            assert sum(1 for _ in enumerate_restricted(n, everything)) == count_partitions_exact(n), n


def test_04_dual_path(criterion):
    census = build_census(110)
    with criterion(4, "generating-function route for D <= 110 (gf part)", budget=5.0):
        full = gf_table(110, census)
        no_one = gf_table(110, census, exclude=(1,))
    with criterion(4, "enumeration and gf agree on Mod, Mod1 and every (D,N) cell, D <= 110", budget=600.0):
        parts = census_parts(census)
        without = parts.without(1)
        for D in range(1, 111):
            by_n = component_counts(D, census, parts)
            assert by_n == {N: c for N, c in enumerate(full[D]) if c}, D
            total = sum(by_n.values())
            assert total == sum(full[D])
            singlet = mod_singlet(D, census, "enumerate", check=False)
            assert singlet == total - sum(component_counts(D, census, without).values())
            assert singlet == sum(full[D]) - sum(no_one[D]), D


def test_05_normalization(criterion):
    with criterion(5, "sum_N f_d(N) = 1 exactly for d <= 110"):
        table = module_table(110, build_census(110))
        for d in range(1, 111):
            weights = table.distribution(d).weights
            assert all(isinstance(w, Fraction) for w in weights.values())
            assert sum(weights.values()) == 1, d


def test_06_fifth_rule(criterion):
    with criterion(6, "argmax f_76 in [12,19], argmax f_100 in [16,24]"):
        table = module_table(100, build_census(100))
        p76 = peak_location(table.distribution(76))
        p100 = peak_location(table.distribution(100))
        assert 12 <= p76 <= 19, p76
        assert 16 <= p100 <= 24, p100


def test_07_invbeta_quality(criterion):
    with criterion(7, "inverted beta fit of f_100 has delta_f <= 1e-3", budget=10.0):
        census = build_census(100)
        fit = fit_invbeta(module_table(100, census).distribution(100))
        assert fit.delta_f <= 1.0e-3, fit.delta_f
        assert fit.unscaled.delta_f <= 1.0e-3, fit.unscaled.delta_f


def test_08_growth_fit(criterion):
    with criterion(8, "growth fit on n = 1 mod 3: c in [0.40,0.52], b in [2.2,3.2]; synthetic 1e-6"):
        fit = fit_growth(mod_series(build_census(110), 110, 1))
        assert 0.40 <= fit.c <= 0.52, fit.c
        assert 2.2 <= fit.b <= 3.2, fit.b
        synth = SeriesPoints(tuple((n, float(growth_model(n, 0.1, 2.5, 0.5))) for n in range(1, 111)))
        rec = fit_growth(synth)
        for got, want in zip((rec.a, rec.b, rec.c), (0.1, 2.5, 0.5)):
            assert abs(got - want) <= 1e-6 * want


def test_09_singlet_series(criterion):
    with criterion(9, "singlet-fraction series, three residue classes, exact values"):
        census = build_census(110)
        series = {r: singlet_series(census, 110, r) for r in (0, 1, 2)}
        xs = sorted(x for s in series.values() for x in s.xs)
        assert xs == list(range(1, 111))
        for r, s in series.items():
            assert s.residue_class == r
            for D, y in s.points:
                assert isinstance(y, Fraction) and 0 < y <= 1
        assert dict(series[2].points)[5] == 1
        assert dict(series[0].points)[6] == Fraction(3, 8)
        # spot-check against the enumeration route
        for D in (5, 6, 37, 110):
            assert dict(series[D % 3].points)[D] == singlet_fraction(D, census)


def _peak(fn):
    gc.collect()
    tracemalloc.start()
    try:
        value = fn()
        return value, tracemalloc.get_traced_memory()[1]
    finally:
        tracemalloc.stop()


def test_10_streaming(criterion):
    with criterion(10, "P_R3(110) streamed in bounded memory, no unrestricted enumeration", budget=10.0):
        census = build_census(110)
        parts = census_parts(census)
        visited = []

        class Recording(PartSet):
            __slots__ = ()

            def upto(self, n):
                allowed = super().upto(n)
                visited.append(allowed)
                return allowed

        rec = Recording(census.support)
        count, streamed = _peak(lambda: sum(1 for _ in enumerate_restricted(110, rec)))
        held, materialized = _peak(lambda: len(list(enumerate_restricted(110, parts))))
        assert count == held == count_restricted(110, parts) == 83663
        # the walk only ever sees irrep dimensions
        assert visited and all(set(a) <= set(census.support) for a in visited)
        assert count < count_partitions_exact(110) // 1000
        # dead tuples on CPython's free lists cap out near 5 MB
        assert streamed < 8 * 1024 * 1024
        assert streamed * 4 < materialized
