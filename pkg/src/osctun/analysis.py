"""Validation sweeps: formula comparisons, the monotonicity lemma, figures.

Everything here is deterministic: the same inputs and config produce
bit-identical tables, so CSV output downstream is reproducible.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from . import specfun
from .quadrature import tunneling_exact
from .asymptotics import (F_INFINITY, big_f_n, f_of_x, leading_term,
                          second_order, zeta_of_x_values)

__all__ = [
    "ComparisonRow", "LemmaReport", "FigureData",
    "compare_sweep", "lemma_check", "ratio_sweep", "figure_dataset",
]


@dataclass(frozen=True)
class ComparisonRow:
    """Exact vs asymptotic tunneling probabilities at one n."""
    n: int
    p_exact: float
    p_leading: float
    p_second: float
    err_leading: float
    err_second: float
    scaled_err_second: float


@dataclass(frozen=True)
class LemmaReport:
    """Numerical check that f is monotone decreasing from 2^(-2/3) toward 0."""
    grid_size: int
    max_violation: float
    endpoint_left: float
    endpoint_decay: float
    passed: bool


@dataclass(frozen=True)
class FigureData:
    """Tabular dataset behind one figure: column names plus row tuples."""
    figure_id: int
    columns: tuple
    rows: list


def compare_sweep(n_values, config=None):
    """One ComparisonRow per n, in input order.

    Each row combines the exact tail integral with both asymptotic formulas;
    scaled_err_second = err_second * n^(4/3) exposes the remainder order.
    """
    rows = []
    for n in n_values:
        n = int(n)
        if n < 1:
            raise ValueError("comparison requires n >= 1, got %d" % n)
        p_exact = tunneling_exact(n, config).value
        p_lead = leading_term(n).value
        p_sec = second_order(n).value
        err_lead = abs(p_exact - p_lead)
        err_sec = abs(p_exact - p_sec)
        rows.append(ComparisonRow(
            n=n, p_exact=p_exact, p_leading=p_lead, p_second=p_sec,
            err_leading=err_lead, err_second=err_sec,
            scaled_err_second=err_sec * float(n) ** (4.0 / 3.0)))
    return rows


def lemma_check(x_max, grid_size):
    """Check f for monotone decrease on a geometric grid over (1, x_max].

    max_violation is the largest forward difference f(x_{i+1}) - f(x_i)
    including the seam from f(1) to the first grid point; negative means
    strictly decreasing everywhere.  passed demands no violation beyond a
    2 ulp slack and the exact 2^(-2/3) left endpoint.
    """
    x_max = float(x_max)
    if not (x_max > 1.0 and math.isfinite(x_max)):
        raise ValueError("x_max must exceed 1")
    grid_size = int(grid_size)
    if grid_size < 100:
        raise ValueError("grid_size must be at least 100")

    e_min, e_max = 1e-9, x_max - 1.0
    ratio = np.arange(grid_size) / (grid_size - 1.0)
    e = e_min * (e_max / e_min) ** ratio
    e[-1] = e_max
    fv = _kernels.f_from_e(e)
    endpoint_left = f_of_x(1.0)
    seq = np.concatenate([[endpoint_left], fv])
    max_violation = float(np.diff(seq).max())
    slack = 2.0 * float(np.spacing(endpoint_left))
    passed = (max_violation <= slack
              and abs(endpoint_left - _kernels.TWO_M23) <= 1e-8)
    return LemmaReport(grid_size=grid_size, max_violation=max_violation,
                       endpoint_left=endpoint_left,
                       endpoint_decay=float(fv[-1]), passed=bool(passed))


def ratio_sweep(n_min, n_max, config=None):
    """Pairs (n, F_infinity / F_n) for n_min <= n <= n_max."""
    n_min, n_max = int(n_min), int(n_max)
    if not (1 <= n_min <= n_max):
        raise ValueError("need 1 <= n_min <= n_max")
    out = []
    for n in range(n_min, n_max + 1):
        out.append((n, F_INFINITY / big_f_n(n, config)))
    return out


def _figure_one(params, config):
    n = int(params.get("n", 40))
    u_max = float(params.get("u_max", 1.6))
    points = int(params.get("points", 1601))
    nu = math.sqrt(2.0 * n + 1.0)
    u = np.linspace(-u_max, u_max, points)
    dens = nu * specfun.hermite_psi_squared(n, nu * u)
    rows = [("density", float(ui), float(di)) for ui, di in zip(u, dens)]
    inside = np.abs(u) < 1.0
    for ui in u[inside]:
        rows.append(("classical", float(ui),
                     1.0 / (math.pi * math.sqrt(1.0 - ui * ui))))
    for m in range(0, n + 1):
        rows.append(("tunneling", float(m), tunneling_exact(m, config).value))
    return ("series", "x", "y"), rows


def _comparison_rows(n_lo, n_hi, config):
    cols = ("n", "p_exact", "p_leading", "p_second",
            "err_leading", "err_second", "scaled_err_second")
    rows = [(r.n, r.p_exact, r.p_leading, r.p_second,
             r.err_leading, r.err_second, r.scaled_err_second)
            for r in compare_sweep(range(n_lo, n_hi + 1), config)]
    return cols, rows


def _figure_three(params):
    x_max = float(params.get("x_max", 5.0))
    points = int(params.get("points", 400))
    ratio = np.arange(points) / (points - 1.0)
    e = 1e-4 * ((x_max - 1.0) / 1e-4) ** ratio
    x = 1.0 + e
    zeta = zeta_of_x_values(x)
    rows = [(1.0, 0.0)]
    rows.extend((float(xi), float(zi)) for xi, zi in zip(x, zeta))
    return ("x", "zeta"), rows


def figure_dataset(figure_id, params=None, config=None):
    """Dataset behind one of the five figures.

    1: rescaled density of level 40 with the classical density and the
       tunneling-probability curve; 2: comparison sweep n=5..612;
    3: the (x, zeta) map; 4: ratio sweep n=6..500; 5: comparison n=513..612.
    """
    figure_id = int(figure_id)
    params = dict(params) if params else {}
    if figure_id == 1:
        cols, rows = _figure_one(params, config)
    elif figure_id == 2:
        cols, rows = _comparison_rows(5, 612, config)
    elif figure_id == 3:
        cols, rows = _figure_three(params)
    elif figure_id == 4:
        cols, rows = ("n", "ratio"), ratio_sweep(6, 500, config)
    elif figure_id == 5:
        cols, rows = _comparison_rows(513, 612, config)
    else:
        raise ValueError("unknown figure id %d" % figure_id)
    return FigureData(figure_id=figure_id, columns=cols, rows=rows)
