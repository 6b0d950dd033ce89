"""Model fits and summary statistics over the exact counts.

* growth model ``Mod(n) ~ (a/n) exp(b n**c)``, fitted by least squares on
  ``log Mod``;
* inverted beta (beta prime) density ``x**(a-1) (1+x)**(-a-b) / B(a, b)``,
  fitted to a noiseless-subsystem distribution, optionally with a
  horizontal scale ``s`` (model ``pdf(N/s)/s``);
* ``delta_f``: mean absolute deviation of a model from the exact weights
  over ``N = 1..d``;
* per-residue-class series of singlet fractions and module totals.

Both fitters use Nelder-Mead from a fixed starting point with fixed
tolerances, restarted from the incumbent until the objective stops
improving, so results are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import minimize

from .irreps import DimensionCensus
from .modcount import (
    Method,
    NssDistribution,
    mod_singlet,
    mod_total,
    module_table,
)

__all__ = [
    "FitError",
    "FitConfig",
    "SeriesPoints",
    "GrowthFit",
    "InvBetaFit",
    "invbeta_pdf",
    "growth_model",
    "fit_growth",
    "fit_invbeta",
    "delta_f",
    "peak_location",
    "singlet_series",
    "mod_series",
]


class FitError(RuntimeError):
    """Optimizer did not converge; ``best`` holds the last iterate's fit."""

    def __init__(self, message: str, best):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class FitConfig:
    tolerance: float = 1e-12
    max_iter: int = 20000
    max_restarts: int = 20


@dataclass(frozen=True)
class SeriesPoints:
    """Points ``(x, y)`` with strictly increasing integer ``x``."""

    points: tuple[tuple[int, int | Fraction | float], ...]
    residue_class: int | None = None

    def __post_init__(self):
        xs = [x for x, _ in self.points]
        if any(a >= b for a, b in zip(xs, xs[1:])):
            raise ValueError("x values must be strictly increasing")
        if self.residue_class is not None:
            if self.residue_class not in (0, 1, 2):
                raise ValueError("residue class must be 0, 1 or 2")
            if any(x % 3 != self.residue_class for x in xs):
                raise ValueError("point outside its residue class")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def xs(self) -> list[int]:
        return [x for x, _ in self.points]

    @property
    def ys(self) -> list:
        return [y for _, y in self.points]

    def describe(self) -> str:
        xs = self.xs
        if not xs:
            return "no points"
        cls = "all n" if self.residue_class is None else f"n = {self.residue_class} (mod 3)"
        return f"{len(xs)} points, n in [{xs[0]}, {xs[-1]}], {cls}"


def _log_positive(y) -> float:
    # exact ints can exceed float range; math.log handles big ints directly
    if isinstance(y, Fraction):
        return math.log(y.numerator) - math.log(y.denominator)
    return math.log(y)


def _nelder_mead(fun: Callable, x0: Sequence[float], config: FitConfig):
    """Nelder-Mead with restarts from the incumbent; returns (x, f, converged, nfev)."""
    opts = dict(
        xatol=config.tolerance,
        fatol=config.tolerance,
        maxiter=config.max_iter,
        maxfev=2 * config.max_iter,
    )
    x = np.asarray(x0, dtype=float)
    best_f = math.inf
    nfev = 0
    converged = False
    for _ in range(config.max_restarts):
        res = minimize(fun, x, method="Nelder-Mead", options=opts)
        nfev += res.nfev
        gain = best_f - res.fun
        if gain > 0:
            x, best_f = res.x, float(res.fun)
        # a successful restart that no longer improves means the simplex has settled
        if res.success and gain <= config.tolerance * max(1.0, abs(best_f)):
            converged = True
            break
        if not res.success and gain <= 0:
            break
    return x, best_f, converged, nfev


# -- growth model -----------------------------------------------------------


@dataclass(frozen=True)
class GrowthFit:
    a: float
    b: float
    c: float
    ssr: float
    points_used: str
    converged: bool = True
    residue_class: int | None = None
    config: FitConfig = field(default_factory=FitConfig)
    init: tuple[float, float, float] = (0.1, 2.5, 0.5)

    def __call__(self, n):
        return growth_model(n, self.a, self.b, self.c)

    def to_report(self) -> dict:
        return {
            "model": "growth",
            "formula": "(a/n) * exp(b * n**c)",
            "parameters": {"a": self.a, "b": self.b, "c": self.c},
            "ssr": self.ssr,
            "ssr_space": "log",
            "delta_f": None,
            "points_used": self.points_used,
            "residue_class": self.residue_class,
            "converged": self.converged,
            "config": {
                "method": "Nelder-Mead",
                "initialization": dict(zip("abc", self.init)),
                **asdict(self.config),
            },
        }


def growth_model(n, a: float, b: float, c: float):
    n = np.asarray(n, dtype=float)
    return a / n * np.exp(b * n**c)


def fit_growth(
    points: SeriesPoints,
    init: tuple[float, float, float] = (0.1, 2.5, 0.5),
    config: FitConfig = FitConfig(),
) -> GrowthFit:
    """Fit ``(a/n) exp(b n**c)`` by minimizing squared residuals of ``log y``.

    Optimizes over ``(log a, b, c)`` so ``a`` stays positive.
    """
    if len(points) < 4:
        raise ValueError("need at least 4 points")
    if any(y <= 0 for y in points.ys):
        raise ValueError("growth fit needs positive y values")
    x = np.array(points.xs, dtype=float)
    logy = np.array([_log_positive(y) for y in points.ys])
    logx = np.log(x)

    def ssr(p):
        la, b, c = p
        with np.errstate(over="ignore", invalid="ignore"):
            r = logy - (la - logx + b * x**c)
        v = float(r @ r)
        return v if math.isfinite(v) else math.inf

    p, f, ok, _ = _nelder_mead(ssr, (math.log(init[0]), init[1], init[2]), config)
    fit = GrowthFit(
        a=math.exp(p[0]),
        b=float(p[1]),
        c=float(p[2]),
        ssr=f,
        points_used=points.describe(),
        converged=ok,
        residue_class=points.residue_class,
        config=config,
        init=tuple(init),
    )
    if not ok:
        raise FitError("growth fit did not converge", fit)
    if not (fit.a > 0 and fit.b > 0 and fit.c > 0):
        raise FitError("growth fit left the positive orthant", fit)
    return fit


# -- inverted beta ----------------------------------------------------------


def _log_beta(alpha: float, beta: float) -> float:
    return math.lgamma(alpha) + math.lgamma(beta) - math.lgamma(alpha + beta)


def invbeta_pdf(x, alpha: float, beta: float):
    """Inverted beta density at ``x > 0``; scalar in, float out, array in, array out.

    >>> invbeta_pdf(1.0, 1.0, 1.0)
    0.25
    """
    if alpha <= 0 or beta <= 0:
        raise ValueError("alpha and beta must be positive")
    xa = np.asarray(x, dtype=float)
    if np.any(xa <= 0):
        raise ValueError("x must be positive")
    logp = (alpha - 1) * np.log(xa) - (alpha + beta) * np.log1p(xa) - _log_beta(alpha, beta)
    out = np.exp(logp)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class InvBetaFit:
    """Inverted beta fit ``pdf(N/scale; alpha, beta) / scale`` of an NSS distribution.

    ``unscaled`` carries the companion fit with ``scale`` pinned to 1.
    """

    alpha: float
    beta: float
    scale: float
    delta_f: float
    ssr: float = 0.0
    d: int | None = None
    converged: bool = True
    init: tuple[float, float, float] | None = None
    config: FitConfig = field(default_factory=FitConfig)
    unscaled: "InvBetaFit | None" = None

    def __post_init__(self):
        if not (self.alpha > 0 and self.beta > 0 and self.scale > 0):
            raise ValueError("alpha, beta and scale must be positive")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return invbeta_pdf(x / self.scale, self.alpha, self.beta) / self.scale

    def _params(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "scale": self.scale}

    def to_report(self) -> dict:
        report = {
            "model": "inverted_beta",
            "formula": "x**(alpha-1) * (1+x)**(-alpha-beta) / B(alpha, beta), x = N/scale, divided by scale",
            "parameters": self._params(),
            "ssr": self.ssr,
            "delta_f": self.delta_f,
            "points_used": f"N = 1..{self.d} (d = {self.d}), zeros included",
            "converged": self.converged,
            "config": {
                "method": "Nelder-Mead",
                "initialization": dict(zip(("alpha", "beta", "scale"), self.init or ())),
                **asdict(self.config),
            },
        }
        if self.unscaled is not None:
            u = self.unscaled
            report["unscaled"] = {
                "parameters": u._params(),
                "ssr": u.ssr,
                "delta_f": u.delta_f,
                "converged": u.converged,
            }
        return report


def _moment_init(y: np.ndarray) -> tuple[float, float]:
    """``(alpha, beta)`` of the unscaled inverted beta with the mean and variance of ``y``.

    ``y[i]`` is the weight at ``N = i + 1``; weights are renormalized first.
    """
    N = np.arange(1, len(y) + 1, dtype=float)
    w = y / y.sum()
    m = float(w @ N)
    v = float(w @ (N - m) ** 2)
    if v <= 0:
        return 2.0, 3.0
    beta = 2.0 + m * (m + 1.0) / v
    alpha = m * (beta - 1.0)
    return alpha, beta


def _as_weights(dist) -> np.ndarray:
    if isinstance(dist, NssDistribution):
        return np.array([float(w) for w in dist.dense()])
    return np.asarray(dist, dtype=float)


def fit_invbeta(dist, config: FitConfig = FitConfig()) -> InvBetaFit:
    """Least-squares inverted beta fit to ``f_d(N)``, ``N = 1..d``.

    ``dist`` is an :class:`NssDistribution` or a plain sequence of weights
    for ``N = 1, 2, ...``.  The three-parameter fit (free scale) is returned;
    the two-parameter fit with scale 1 is attached as ``unscaled``.  Both
    start from the moment-matched ``(alpha, beta)`` at scale 1 and work in
    log parameters.
    """
    y = _as_weights(dist)
    if np.count_nonzero(y) < 5:
        raise ValueError("distribution needs at least 5 nonzero weights to fit")
    d = len(y)
    N = np.arange(1, d + 1, dtype=float)
    a0, b0 = _moment_init(y)

    def model(logp):
        a, b, s = np.exp(logp)
        logpdf = (a - 1) * np.log(N / s) - (a + b) * np.log1p(N / s) - _log_beta(a, b)
        return np.exp(logpdf) / s

    def ssr3(logp):
        with np.errstate(over="ignore", invalid="ignore"):
            r = y - model(logp)
        v = float(r @ r)
        return v if math.isfinite(v) else math.inf

    def ssr2(logp):
        return ssr3((logp[0], logp[1], 0.0))

    p2, f2, ok2, _ = _nelder_mead(ssr2, (math.log(a0), math.log(b0)), config)
    p3, f3, ok3, _ = _nelder_mead(ssr3, (math.log(a0), math.log(b0), 0.0), config)

    a2, b2 = np.exp(p2)
    unscaled = InvBetaFit(
        alpha=float(a2), beta=float(b2), scale=1.0, delta_f=0.0, ssr=f2, d=d,
        converged=ok2, init=(a0, b0, 1.0), config=config,
    )
    unscaled = replace(unscaled, delta_f=delta_f(y, unscaled))
    a3, b3, s3 = np.exp(p3)
    fit = InvBetaFit(
        alpha=float(a3), beta=float(b3), scale=float(s3), delta_f=0.0, ssr=f3, d=d,
        converged=ok3, init=(a0, b0, 1.0), config=config, unscaled=unscaled,
    )
    fit = replace(fit, delta_f=delta_f(y, fit))
    if not (ok2 and ok3):
        raise FitError("inverted beta fit did not converge", fit)
    return fit


def delta_f(dist, model: Callable) -> float:
    """Mean absolute deviation ``(1/d) sum_{N=1..d} |f_d(N) - model(N)|``.

    ``dist`` is an :class:`NssDistribution` (unsupported ``N`` count as
    weight 0) or a sequence of weights for ``N = 1..d``.  ``model`` is any
    callable on an array of ``N``; an :class:`InvBetaFit` works.
    """
    y = _as_weights(dist)
    N = np.arange(1, len(y) + 1, dtype=float)
    pred = np.broadcast_to(np.asarray(model(N), dtype=float), N.shape)
    return float(np.abs(y - pred).sum() / len(y))


def peak_location(dist: NssDistribution) -> int:
    """Component count with the largest weight; ties go to the smaller ``N``."""
    best_n, best_w = None, None
    for n, w in sorted(dist.weights.items()):
        if best_w is None or w > best_w:
            best_n, best_w = n, w
    if best_n is None:
        raise ValueError("empty distribution")
    return best_n


# -- series -----------------------------------------------------------------


def _residues(D_max: int, residue: int | None) -> list[int]:
    if residue is not None and residue not in (0, 1, 2):
        raise ValueError("residue must be 0, 1 or 2")
    return [D for D in range(1, D_max + 1) if residue is None or D % 3 == residue]


def singlet_series(
    census: DimensionCensus, D_max: int, residue: int | None, method: Method = "gf"
) -> SeriesPoints:
    """Points ``(D, Mod1(D)/Mod(D))`` for ``D <= D_max`` in one residue class mod 3."""
    Ds = _residues(D_max, residue)
    if method == "gf":
        table = module_table(D_max, census)
        pts = [(D, table.fraction(D)) for D in Ds]
    else:
        pts = [
            (D, Fraction(mod_singlet(D, census, method), mod_total(D, census, method)))
            for D in Ds
        ]
    return SeriesPoints(tuple(pts), residue)


def mod_series(
    census: DimensionCensus, D_max: int, residue: int | None, method: Method = "gf"
) -> SeriesPoints:
    """Points ``(D, Mod(D))`` for ``D <= D_max`` in one residue class mod 3."""
    Ds = _residues(D_max, residue)
    if method == "gf":
        table = module_table(D_max, census)
        pts = [(D, table.total(D)) for D in Ds]
    else:
        pts = [(D, mod_total(D, census, method)) for D in Ds]
    return SeriesPoints(tuple(pts), residue)
