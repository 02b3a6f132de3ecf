"""Exact ASM counts, entropy constants and numerical checks of the
asymptotic expansions for ASMs and square gapless rectangles."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, asdict
from typing import Iterable, Mapping, Sequence

import numpy as np

from .rectangles import rho

LN2 = math.log(2)
LN3 = math.log(3)

EXACT_LOG_LIMIT = 30


def asm_count(n: int) -> int:
    """prod_{0<=i<n} (3i+1)! / (n+i)!, computed exactly."""
    if n < 1:
        raise ValueError("n must be >= 1")
    num = den = 1
    for i in range(n):
        num *= math.factorial(3 * i + 1)
        den *= math.factorial(n + i)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"inexact division computing the ASM count for n={n}")
    return q


def log_asm_count(n: int) -> float:
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.fsum(math.lgamma(3 * i + 2) - math.lgamma(n + i + 1) for i in range(n))


def log_binomial(a: int, b: int) -> float:
    return math.lgamma(a + 1) - math.lgamma(b + 1) - math.lgamma(a - b + 1)


def log_rho(m: int, p: int) -> float:
    if m == 0 or p == 0:
        return 0.0
    return math.fsum(log_binomial(m + 2 * i - 1, i) - log_binomial(2 * i - 1, i) for i in range(1, p + 1))


def lambda1() -> float:
    """Entropy of ASMs, sqrt(27/16) = 3*sqrt(3)/4."""
    return 3 * math.sqrt(3) / 4


def lambda2() -> float:
    """Entropy of the alpha lower bound, 3^(3/4)/2."""
    return 3 ** 0.75 / 2


def conjectured_entropy() -> float:
    """3^(9/8) / 2^(3/2), i.e. a_n ~ (3^9/2^12)^(n^2/8)."""
    return 3 ** (9 / 8) / 2 ** 1.5


def conjectured_log_entropy() -> float:
    return 9 / 8 * LN3 - 1.5 * LN2


@dataclass(frozen=True)
class EntropyReport:
    n: int
    log_count: float
    normalized: float
    reference: float
    residual: float


def entropy_series(counts: Mapping[int, int], reference: float | None = None) -> list[EntropyReport]:
    """ln(count)/n^2 per n, against ``reference`` (default: the conjectured
    gapless log-entropy)."""
    if not counts:
        raise ValueError("counts must be nonempty")
    if reference is None:
        reference = conjectured_log_entropy()
    out = []
    for n in sorted(counts):
        lc = math.log(counts[n])
        norm = lc / n ** 2
        out.append(EntropyReport(n, lc, norm, reference, norm - reference))
    return out


@dataclass(frozen=True)
class TrendVerdict:
    increasing: bool
    bracketed: bool
    last: EntropyReport


def gapless_trend(counts: Mapping[int, int], start: int = 4) -> TrendVerdict:
    """Monotonicity of ln(a_n)/n^2 from ``start`` on, and whether the last
    value lies strictly between ln(lambda2) and ln(lambda1)."""
    series = [r for r in entropy_series(counts) if r.n >= start]
    vals = [r.normalized for r in series]
    increasing = all(a < b for a, b in zip(vals, vals[1:]))
    last = series[-1]
    bracketed = math.log(lambda2()) < last.normalized < math.log(lambda1())
    return TrendVerdict(increasing, bracketed, last)


# ---------------------------------------------------------------------------
# Residual reports


@dataclass(frozen=True)
class ResidualRow:
    n: int
    exact: float
    expansion: float
    residual: float


def residuals_to_csv(rows: Iterable[ResidualRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "exact", "expansion", "residual"])
    for r in rows:
        writer.writerow([r.n, repr(r.exact), repr(r.expansion), repr(r.residual)])
    return buf.getvalue()


def entropy_to_csv(rows: Iterable[EntropyReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "log_count", "normalized", "reference", "residual"])
    for r in rows:
        d = asdict(r)
        writer.writerow([d["n"]] + [repr(d[k]) for k in ("log_count", "normalized", "reference", "residual")])
    return buf.getvalue()


def rho_square_expansion(n: int) -> float:
    """n^2 (9 ln3 - 12 ln2) + n (3/2 ln3 - ln2) - ln(n)/24."""
    return n * n * (9 * LN3 - 12 * LN2) + n * (1.5 * LN3 - LN2) - math.log(n) / 24


def exact_log_rho_square(n: int) -> float:
    """ln rho_{2n,2n}: big-integer logarithm up to n = 30, log-gamma beyond."""
    if n <= EXACT_LOG_LIMIT:
        return math.log(rho(2 * n, 2 * n))
    return log_rho(2 * n, 2 * n)


def rho_asymptotic_check(n_max: int, n_min: int = 1) -> list[ResidualRow]:
    rows = []
    for n in range(n_min, n_max + 1):
        exact = exact_log_rho_square(n)
        exp = rho_square_expansion(n)
        rows.append(ResidualRow(n, exact, exp, exact - exp))
    return rows


def residuals_bounded(rows: Sequence[ResidualRow], tol: float = 1e-2) -> bool:
    """No growth: the residual spread over the second half of the range is
    no larger than over the whole range, and the tail varies by less than tol."""
    res = [r.residual for r in rows]
    tail = res[len(res) // 2:]
    return max(tail) - min(tail) <= max(res) - min(res) and max(tail) - min(tail) < tol


@dataclass(frozen=True)
class AsmFit:
    """ln u_n - (n^2/2) ln(27/16) ~ n ln(beta) + exponent ln(n) + ln(gamma)."""

    log_beta: float
    exponent: float
    log_gamma: float
    rows: list[ResidualRow]

    @property
    def beta(self) -> float:
        return math.exp(self.log_beta)

    @property
    def gamma(self) -> float:
        return math.exp(self.log_gamma)


def asm_leading(n: int) -> float:
    return n * n / 2 * math.log(27 / 16)


def asm_asymptotic_check(n_max: int, n_min: int = 1, fit_from: int | None = None) -> AsmFit:
    """Least-squares fit of the sub-leading terms of ln u_n over
    [fit_from, n_max]; residual rows cover [n_min, n_max]."""
    if fit_from is None:
        fit_from = max(n_min, n_max // 5)
    ns = np.arange(fit_from, n_max + 1, dtype=float)
    rem = np.array([log_asm_count(int(n)) - asm_leading(int(n)) for n in ns])
    design = np.column_stack([ns, np.log(ns), np.ones_like(ns)])
    (lb, ex, lg), *_ = np.linalg.lstsq(design, rem, rcond=None)
    rows = []
    for n in range(n_min, n_max + 1):
        exact = log_asm_count(n)
        model = asm_leading(n) + lb * n + ex * math.log(n) + lg
        rows.append(ResidualRow(n, exact, model, exact - model))
    return AsmFit(float(lb), float(ex), float(lg), rows)


def asm_remainder(n: int) -> float:
    """ln u_n - (n^2/2) ln(27/16) + (5/36) ln n; tends to a constant if beta = 1."""
    return log_asm_count(n) - asm_leading(n) + 5 / 36 * math.log(n)
