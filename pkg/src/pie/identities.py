"""Registry of identity checkers with exact and numeric modes.

Every identity in scope has a closed tag; check_identity dispatches a tag to
its checker and returns a machine-readable IdentityReport.  Exact mode
compares normal forms in Q[c] (or plain integers) with zero tolerance.
Numeric mode samples fixed complex grids for (z, c) and compares within a
relative tolerance, recording a condition estimate (the ratio of the sum of
term magnitudes to the result magnitude) instead of ever widening the
tolerance.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import AlgorithmFault
from .exact import (
    C,
    CPolynomial,
    WeightParams,
    bell_polynomial,
    complex_power,
    divisors,
    sigma_int,
    sigma_zc_exact,
    sigma_zc_numeric,
)
from .involution import class_sum
from .partitions import (
    count_exact_part_sizes,
    distinct_stats,
    partitions_by_largest_and_sizes,
)
from .series import (
    ExpSeries,
    TruncatedSeries,
    series_A,
    series_K,
    series_M,
    series_dilcher_binomial,
    series_entry4,
)


class IdentityId(str, Enum):
    BS_BASIC = "bs_basic"
    BS_INT = "bs_int"
    BS_ONEVAR = "bs_onevar"
    UCHIMURA_TRIPLE = "uchimura_triple"
    ENTRY4 = "entry4"
    DILCHER_CM = "dilcher_cm"
    EQ_1_13 = "eq_1_13"
    THM_1_2 = "thm_1_2"
    THM_2_2_EXP = "thm_2_2_exp"
    THM_2_2_BELL = "thm_2_2_bell"
    THM_2_3 = "thm_2_3"
    COR_2_4 = "cor_2_4"
    COR_2_5 = "cor_2_5"
    THM_2_6 = "thm_2_6"
    COR_2_7 = "cor_2_7"
    AGL_PTI = "agl_pti"
    AGL_SCALED = "agl_scaled"
    CLASS_SUM = "class_sum"


# identities whose statements extend to complex (z, c) sampling
NUMERIC_CAPABLE = frozenset(
    {IdentityId.BS_ONEVAR, IdentityId.THM_2_3, IdentityId.COR_2_4, IdentityId.THM_2_6}
)


@dataclass(frozen=True)
class CheckConfig:
    """Shared knobs for the checkers; every grid is fixed, never random."""

    n_max: int = 30
    q_order: int = 25
    m_max: int = 4
    k_fold_max: int = 4
    exponents: tuple[int, ...] = (0, 1, 2, 3, 4)
    z_grid: tuple[complex, ...] = (1.5 + 0j, -1 + 0j, -2 + 0j, 0.5 + 0.5j)
    c_grid: tuple[complex, ...] = (0.4 + 0j, -0.3 + 0j, 0.4 - 0.3j, 0.2 + 0.7j)
    c_exact: tuple[Fraction, ...] = (Fraction(1), Fraction(2, 3), Fraction(-1, 2))
    mode: str = "exact"
    tolerance: float = 1e-9


@dataclass
class IdentityReport:
    """Verdict of one identity check over a parameter range."""

    id: IdentityId
    mode: str
    range: dict
    status: str
    first_failure: dict | None
    elapsed_ms: float
    condition: float | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self, include_timing: bool = False) -> dict:
        out = {
            "id": self.id.value,
            "mode": self.mode,
            "range": _stringify(self.range),
            "status": self.status,
            "first_failure": _stringify(self.first_failure),
            "elapsed_ms": round(self.elapsed_ms, 3) if include_timing else None,
        }
        if self.condition is not None:
            out["condition"] = self.condition
        return out


def _stringify(value):
    if value is None or isinstance(value, (int, str, bool)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, (Fraction, complex, CPolynomial)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    if isinstance(value, dict):
        return {k: _stringify(v) for k, v in value.items()}
    return str(value)


def _sign(num_parts: int) -> int:
    return -1 if num_parts % 2 == 0 else 1


def _cap(n: int) -> int:
    cap = 32
    while cap < n:
        cap *= 2
    return cap


@lru_cache(maxsize=None)
def _divisor_counts(limit: int) -> tuple[int, ...]:
    arr = [0] * (limit + 1)
    for d in range(1, limit + 1):
        for m in range(d, limit + 1, d):
            arr[m] += 1
    return tuple(arr)


@lru_cache(maxsize=None)
def _sigma_powers(limit: int, z: int) -> tuple[int, ...]:
    arr = [0] * (limit + 1)
    for d in range(1, limit + 1):
        dz = d**z
        for m in range(d, limit + 1, d):
            arr[m] += dz
    return tuple(arr)


def _conv(a, b, limit: int) -> tuple[int, ...]:
    out = [0] * (limit + 1)
    for n in range(2, limit + 1):
        out[n] = sum(a[j] * b[n - j] for j in range(1, n))
    return tuple(out)


def _poly(acc: dict[int, int]) -> CPolynomial:
    return CPolynomial({e: v for e, v in acc.items() if v})


# -- two-variable weighted sum (window weights against sigma_{z,c}) ---------


def _thm21_lhs_numeric(n: int, z: complex, c: complex) -> tuple[complex, float]:
    total = 0j
    abs_sum = 0.0
    for s, largest, k in distinct_stats(n):
        sign = _sign(k)
        for e in range(largest - s + 1, largest + 1):
            term = complex_power(e, z) * c**e
            total += sign * term
            abs_sum += abs(term)
    return total, abs_sum


def lhs_rhs_thm21(n: int, w: WeightParams):
    """Both sides of the two-variable weighted identity at a single n.

    Exact mode returns a pair of CPolynomial; numeric mode a pair of complex.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if w.mode == "exact":
        z = w.z
        acc: dict[int, int] = {}
        for s, largest, k in distinct_stats(n):
            sign = _sign(k)
            for e in range(largest - s + 1, largest + 1):
                acc[e] = acc.get(e, 0) + sign * e**z
        return _poly(acc), sigma_zc_exact(z, n)
    z, c = complex(w.z), complex(w.c)
    lhs, _ = _thm21_lhs_numeric(n, z, c)
    return lhs, sigma_zc_numeric(z, c, n)


# -- smallest-part powers against the binomial largest-part sums ------------
#
# Terms with base l - j = 0 contribute nothing for every exponent k,
# including k = 0: they are the constant terms annihilated by the weight
# operator, and the analytic continuation from k > 0 keeps them at zero.


def _thm23_exact_symbolic(n: int, k: int) -> tuple[CPolynomial, CPolynomial]:
    lhs: dict[int, int] = {}
    for s, _largest, kp in distinct_stats(n):
        lhs[s] = lhs.get(s, 0) + _sign(kp) * s**k
    rhs: dict[int, int] = {}
    for (largest, v), cnt in partitions_by_largest_and_sizes(n).items():
        for j in range(v + 1):
            base = largest - j
            if base == 0:
                continue
            w = cnt * (-1) ** j * comb(v, j) * base**k
            rhs[base] = rhs.get(base, 0) + w
    return _poly(lhs), _poly(rhs)


def _thm23_exact_scalar(n: int, k: int, c: Fraction) -> tuple[Fraction, Fraction]:
    cpow = [Fraction(1)]
    for _ in range(n):
        cpow.append(cpow[-1] * c)
    lhs = Fraction(0)
    for s, _largest, kp in distinct_stats(n):
        lhs += _sign(kp) * s**k * cpow[s]
    rhs = Fraction(0)
    for (largest, v), cnt in partitions_by_largest_and_sizes(n).items():
        for j in range(v + 1):
            base = largest - j
            if base == 0:
                continue
            rhs += cnt * (-1) ** j * comb(v, j) * base**k * cpow[base]
    return lhs, rhs


def _thm23_numeric(n: int, z: complex, c: complex) -> tuple[complex, complex, float]:
    lhs = 0j
    abs_sum = 0.0
    for s, _largest, kp in distinct_stats(n):
        term = complex_power(s, z) * c**s
        lhs += _sign(kp) * term
        abs_sum += abs(term)
    rhs = 0j
    for (largest, v), cnt in partitions_by_largest_and_sizes(n).items():
        for j in range(v + 1):
            base = largest - j
            if base == 0:
                continue
            rhs += cnt * (-1) ** j * comb(v, j) * complex_power(base, z) * c**base
    return lhs, rhs, abs_sum


def lhs_rhs_thm23(n: int, k, c):
    """Both sides of the smallest-part power identity at a single n."""
    if n < 1:
        raise ValueError("n must be positive")
    exact_k = isinstance(k, int) and not isinstance(k, bool) and k >= 0
    if exact_k and isinstance(c, CPolynomial):
        return _thm23_exact_symbolic(n, k)
    if exact_k and isinstance(c, (int, Fraction)):
        return _thm23_exact_scalar(n, k, Fraction(c))
    lhs, rhs, _ = _thm23_numeric(n, complex(k), complex(c))
    return lhs, rhs


# -- initial-segment powers with the shifted binomial sums ------------------


def _thm26_exact_symbolic(n: int, k: int) -> tuple[CPolynomial, CPolynomial]:
    lhs: dict[int, int] = {}
    for s, _largest, kp in distinct_stats(n):
        sign = _sign(kp)
        for j in range(1, s + 1):
            lhs[j] = lhs.get(j, 0) + sign * j**k
    rhs: dict[int, int] = {}
    for (largest, v), cnt in partitions_by_largest_and_sizes(n).items():
        if v < 2:
            continue
        for j in range(v):
            base = largest - j
            w = cnt * (-1) ** j * comb(v - 1, j) * base**k
            rhs[base] = rhs.get(base, 0) + w
    for d in divisors(n):
        rhs[d] = rhs.get(d, 0) + d**k
    return _poly(lhs), _poly(rhs)


def _thm26_numeric(n: int, z: complex, c: complex) -> tuple[complex, complex, float]:
    lhs = 0j
    abs_sum = 0.0
    for s, _largest, kp in distinct_stats(n):
        sign = _sign(kp)
        for j in range(1, s + 1):
            term = complex_power(j, z) * c**j
            lhs += sign * term
            abs_sum += abs(term)
    rhs = 0j
    for (largest, v), cnt in partitions_by_largest_and_sizes(n).items():
        if v < 2:
            continue
        for j in range(v):
            base = largest - j
            rhs += cnt * (-1) ** j * comb(v - 1, j) * complex_power(base, z) * c**base
    rhs += sigma_zc_numeric(z, c, n)
    return lhs, rhs, abs_sum


def lhs_rhs_thm26(n: int, k, c):
    """Both sides of the initial-segment power identity at a single n."""
    if n < 1:
        raise ValueError("n must be positive")
    exact_k = isinstance(k, int) and not isinstance(k, bool) and k >= 0
    if exact_k and isinstance(c, CPolynomial):
        return _thm26_exact_symbolic(n, k)
    lhs, rhs, _ = _thm26_numeric(n, complex(k), complex(c))
    return lhs, rhs


# -- integer corollaries -----------------------------------------------------


def check_cor27(n: int) -> tuple[int, int]:
    """Count with exactly two part sizes vs the signed s*(l-s) moment."""
    if n < 1:
        raise ValueError("n must be positive")
    lhs = count_exact_part_sizes(n, 2)
    rhs = 0
    for s, largest, k in distinct_stats(n):
        rhs += (-_sign(k)) * s * (largest - s)
    return lhs, rhs


def check_cor25(n: int) -> tuple[int, int]:
    """Count with exactly two part sizes vs the divisor-count convolution."""
    if n < 1:
        raise ValueError("n must be positive")
    d = _divisor_counts(_cap(n))
    convolution = sum(d[j] * d[n - j] for j in range(1, n))
    numerator = convolution + d[n] - sigma_int(1, n)
    if numerator % 2:
        raise AlgorithmFault(f"half-integer right side at n={n}: {numerator}/2")
    return count_exact_part_sizes(n, 2), numerator // 2


# -- geometric-weight identity and its scaled form --------------------------


def check_agl(n: int, scaled: bool) -> tuple[CPolynomial, CPolynomial]:
    """Both sides of the geometric smallest-part weight identity.

    Unscaled: weights 1 + c + ... + c^(s-1) against c^(l-v) (c-1)^(v-1);
    scaled: weights c^s - 1 against c^(l-v) (c-1)^v.
    """
    if n < 1:
        raise ValueError("n must be positive")
    lhs: dict[int, int] = {}
    for s, _largest, kp in distinct_stats(n):
        sign = _sign(kp)
        if scaled:
            lhs[s] = lhs.get(s, 0) + sign
            lhs[0] = lhs.get(0, 0) - sign
        else:
            for e in range(s):
                lhs[e] = lhs.get(e, 0) + sign
    rhs: dict[int, int] = {}
    for (largest, v), cnt in partitions_by_largest_and_sizes(n).items():
        p = v if scaled else v - 1
        base = largest - v
        for i in range(p + 1):
            w = cnt * comb(p, i) * (-1) ** (p - i)
            rhs[base + i] = rhs.get(base + i, 0) + w
    return _poly(lhs), _poly(rhs)


# -- exponential generating function routes ----------------------------------


def _thm22_routes(m_max: int, q_order: int, c):
    a_series = series_A(c, q_order)
    ms = [series_M(m, c, q_order) for m in range(1, m_max + 1)]
    ks = [series_K(m, c, q_order) for m in range(1, m_max + 1)]
    direct = ExpSeries(
        [a_series]
        + [ms[m - 1].scale(Fraction(1, factorial(m))) for m in range(1, m_max + 1)]
    )
    ring = a_series.ring
    gen = ExpSeries(
        [TruncatedSeries.zero(q_order, ring)]
        + [ks[m - 1].scale(Fraction(1, factorial(m))) for m in range(1, m_max + 1)]
    )
    via_exp = gen.exp().scale_coeffs(a_series)
    bell_pairs = [
        (ms[m - 1], a_series * bell_polynomial(m, ks[:m]))
        for m in range(1, m_max + 1)
    ]
    return direct, via_exp, bell_pairs


def _first_series_diff(a: TruncatedSeries, b: TruncatedSeries) -> int:
    for e in range(a.order + 1):
        if a.coeffs[e] != b.coeffs[e]:
            return e
    return -1


def check_thm22(m_max: int, q_order: int, c) -> "IdentityReport":
    """Compare the two exponential-generating-function routes and the Bell
    polynomial closed form, for one exact c.  Reported under the
    t-expansion tag; the failure record says which part broke.
    """
    if not 1 <= m_max <= 6:
        raise ValueError("m_max must be between 1 and 6")
    if q_order < 10:
        raise ValueError("q_order must be at least 10")
    t0 = time.perf_counter()
    rng = {"m_max": m_max, "q_order": q_order, "c": c}
    failure = None
    direct, via_exp, bell_pairs = _thm22_routes(m_max, q_order, c)
    for m in range(m_max + 1):
        if direct[m] != via_exp[m]:
            failure = {
                "part": "t-expansion",
                "m": m,
                "q_power": _first_series_diff(direct[m], via_exp[m]),
                "c": c,
            }
            break
    if failure is None:
        for m, (lhs, rhs) in enumerate(bell_pairs, start=1):
            if lhs != rhs:
                failure = {
                    "part": "bell",
                    "m": m,
                    "q_power": _first_series_diff(lhs, rhs),
                    "c": c,
                }
                break
    return _report(IdentityId.THM_2_2_EXP, "exact", rng, failure, t0)


# -- report harness -----------------------------------------------------------


def _report(
    ident: IdentityId,
    mode: str,
    rng: dict,
    failure: dict | None,
    t0: float,
    condition: float | None = None,
) -> IdentityReport:
    return IdentityReport(
        id=ident,
        mode=mode,
        range=rng,
        status="pass" if failure is None else "fail",
        first_failure=failure,
        elapsed_ms=(time.perf_counter() - t0) * 1000.0,
        condition=condition,
    )


def _within(lhs: complex, rhs: complex, tol: float) -> bool:
    return abs(lhs - rhs) <= tol * max(1.0, abs(rhs))


# -- checkers -----------------------------------------------------------------


def _check_bs_basic(cfg: CheckConfig) -> IdentityReport:
    t0 = time.perf_counter()
    rng = {"n_max": cfg.n_max}
    failure = None
    for n in range(1, cfg.n_max + 1):
        lhs = sum(_sign(k) * s for s, _l, k in distinct_stats(n))
        rhs = len(divisors(n))
        if lhs != rhs:
            failure = {"n": n, "lhs": lhs, "rhs": rhs}
            break
    return _report(IdentityId.BS_BASIC, "exact", rng, failure, t0)


def _check_bs_int(cfg: CheckConfig) -> IdentityReport:
    t0 = time.perf_counter()
    rng = {"n_max": cfg.n_max, "exponents": list(cfg.exponents)}
    failure = None
    for n in range(1, cfg.n_max + 1):
        for z in cfg.exponents:
            lhs = 0
            for s, largest, k in distinct_stats(n):
                sign = _sign(k)
                lhs += sign * sum(e**z for e in range(largest - s + 1, largest + 1))
            rhs = sigma_int(z, n)
            if lhs != rhs:
                failure = {"n": n, "z": z, "lhs": lhs, "rhs": rhs}
                break
        if failure:
            break
    return _report(IdentityId.BS_INT, "exact", rng, failure, t0)


def _check_bs_onevar(cfg: CheckConfig) -> IdentityReport:
    t0 = time.perf_counter()
    if cfg.mode == "exact":
        rng = {"n_max": cfg.n_max, "exponents": list(cfg.exponents), "c": "symbolic"}
        failure = None
        for n in range(1, cfg.n_max + 1):
            for z in cfg.exponents:
                lhs, rhs = lhs_rhs_thm21(n, WeightParams(z, C))
                if lhs != rhs:
                    failure = {"n": n, "z": z, "lhs": lhs, "rhs": rhs}
                    break
            if failure:
                break
        return _report(IdentityId.BS_ONEVAR, "exact", rng, failure, t0)

    rng = {
        "n_max": cfg.n_max,
        "z_grid": list(cfg.z_grid),
        "c_grid": list(cfg.c_grid),
        "tolerance": cfg.tolerance,
    }
    failure = None
    cond_max = 0.0
    for n in range(1, cfg.n_max + 1):
        for z in cfg.z_grid:
            for c in cfg.c_grid:
                lhs, abs_sum = _thm21_lhs_numeric(n, z, c)
                rhs = sigma_zc_numeric(z, c, n)
                cond_max = max(cond_max, abs_sum / max(1.0, abs(lhs)))
                if not _within(lhs, rhs, cfg.tolerance):
                    failure = {"n": n, "z": z, "c": c, "lhs": lhs, "rhs": rhs}
                    break
            if failure:
                break
        if failure:
            break
    return _report(IdentityId.BS_ONEVAR, "numeric", rng, failure, t0, cond_max)


def _check_thm_2_3(cfg: CheckConfig) -> IdentityReport:
    t0 = time.perf_counter()
    if cfg.mode == "exact":
        rng = {"n_max": cfg.n_max, "exponents": list(cfg.exponents), "c": "symbolic"}
        failure = None
        for n in range(1, cfg.n_max + 1):
            for k in cfg.exponents:
                lhs, rhs = _thm23_exact_symbolic(n, k)
                if lhs != rhs:
                    failure = {"n": n, "k": k, "lhs": lhs, "rhs": rhs}
                    break
            if failure:
                break
        return _report(IdentityId.THM_2_3, "exact", rng, failure, t0)

    rng = {
        "n_max": cfg.n_max,
        "z_grid": list(cfg.z_grid),
        "c_grid": list(cfg.c_grid),
        "tolerance": cfg.tolerance,
    }
    failure = None
    cond_max = 0.0
    for n in range(1, cfg.n_max + 1):
        for z in cfg.z_grid:
            for c in cfg.c_grid:
                lhs, rhs, abs_sum = _thm23_numeric(n, z, c)
                cond_max = max(cond_max, abs_sum / max(1.0, abs(lhs)))
                if not _within(lhs, rhs, cfg.tolerance):
                    failure = {"n": n, "k": z, "c": c, "lhs": lhs, "rhs": rhs}
                    break
            if failure:
                break
        if failure:
            break
    return _report(IdentityId.THM_2_3, "numeric", rng, failure, t0, cond_max)


def _check_cor_2_4(cfg: CheckConfig) -> IdentityReport:
    t0 = time.perf_counter()
    if cfg.mode == "exact":
        rng = {"n_max": cfg.n_max, "exponents": list(cfg.exponents), "c": 1}
        failure = None
        for n in range(1, cfg.n_max + 1):
            for k in cfg.exponents:
                lhs, rhs = _thm23_exact_scalar(n, k, Fraction(1))
                if lhs != rhs:
                    failure = {"n": n, "k": k, "lhs": lhs, "rhs": rhs}
                    break
                if k == 1 and lhs != len(divisors(n)):
                    # the k=1 chain collapses to the divisor count
                    failure = {"n": n, "k": k, "lhs": lhs, "rhs": len(divisors(n))}
                    break
            if failure:
                break
        return _report(IdentityId.COR_2_4, "exact", rng, failure, t0)

    rng = {
        "n_max": cfg.n_max,
        "z_grid": list(cfg.z_grid),
        "c": 1,
        "tolerance": cfg.tolerance,
    }
    failure = None
    cond_max = 0.0
    for n in range(1, cfg.n_max + 1):
        for z in cfg.z_grid:
            lhs, rhs, abs_sum = _thm23_numeric(n, z, 1 + 0j)
            cond_max = max(cond_max, abs_sum / max(1.0, abs(lhs)))
            if not _within(lhs, rhs, cfg.tolerance):
                failure = {"n": n, "k": z, "lhs": lhs, "rhs": rhs}
                break
        if failure:
            break
    return _report(IdentityId.COR_2_4, "numeric", rng, failure, t0, cond_max)


def _check_thm_2_6(cfg: CheckConfig) -> IdentityReport:
    t0 = time.perf_counter()
    if cfg.mode == "exact":
        rng = {"n_max": cfg.n_max, "exponents": list(cfg.exponents), "c": "symbolic"}
        failure = None
        for n in range(1, cfg.n_max + 1):
            for k in cfg.exponents:
                lhs, rhs = _thm26_exact_symbolic(n, k)
                if lhs != rhs:
                    failure = {"n": n, "k": k, "lhs": lhs, "rhs": rhs}
                    break
            if failure:
                break
        return _report(IdentityId.THM_2_6, "exact", rng, failure, t0)

    rng = {
        "n_max": cfg.n_max,
        "z_grid": list(cfg.z_grid),
        "c_grid": list(cfg.c_grid),
        "tolerance": cfg.tolerance,
    }
    failure = None
    cond_max = 0.0
    for n in range(1, cfg.n_max + 1):
        for z in cfg.z_grid:
            for c in cfg.c_grid:
                lhs, rhs, abs_sum = _thm26_numeric(n, z, c)
                cond_max = max(cond_max, abs_sum / max(1.0, abs(lhs)))
                if not _within(lhs, rhs, cfg.tolerance):
                    failure = {"n": n, "k": z, "c": c, "lhs": lhs, "rhs": rhs}
                    break
            if failure:
                break
        if failure:
            break
    return _report(IdentityId.THM_2_6, "numeric", rng, failure, t0, cond_max)


def _check_cor_2_5(cfg: CheckConfig) -> IdentityReport:
    t0 = time.perf_counter()
    rng = {"n_max": cfg.n_max}
    failure = None
    for n in range(1, cfg.n_max + 1):
        lhs, rhs = check_cor25(n)
        if lhs != rhs:
            failure = {"n": n, "lhs": lhs, "rhs": rhs}
            break
    return _report(IdentityId.COR_2_5, "exact", rng, failure, t0)


def _check_cor_2_7(cfg: CheckConfig) -> IdentityReport:
    t0 = time.perf_counter()
    rng = {"n_max": cfg.n_max}
    failure = None
    for n in range(1, cfg.n_max + 1):
        lhs, rhs = check_cor27(n)
        if lhs != rhs:
            failure = {"n": n, "lhs": lhs, "rhs": rhs}
            break
    return _report(IdentityId.COR_2_7, "exact", rng, failure, t0)


def _check_agl(cfg: CheckConfig, scaled: bool) -> IdentityReport:
    ident = IdentityId.AGL_SCALED if scaled else IdentityId.AGL_PTI
    t0 = time.perf_counter()
    rng = {"n_max": cfg.n_max, "c": "symbolic", "scaled": scaled}
    failure = None
    for n in range(1, cfg.n_max + 1):
        lhs, rhs = check_agl(n, scaled)
        if lhs != rhs:
            failure = {"n": n, "lhs": lhs, "rhs": rhs}
            break
    return _report(ident, "exact", rng, failure, t0)


def _check_class_sum(cfg: CheckConfig) -> IdentityReport:
    t0 = time.perf_counter()
    rng = {"n_max": cfg.n_max}
    failure = None
    for n in range(1, cfg.n_max + 1):
        for N in range(1, n + 1):
            got = class_sum(n, N)
            want = 1 if n % N == 0 else 0
            if got != want:
                failure = {"n": n, "N": N, "lhs": got, "rhs": want}
                break
        if failure:
            break
    return _report(IdentityId.CLASS_SUM, "exact", rng, failure, t0)


def _check_entry4(cfg: CheckConfig) -> IdentityReport:
    t0 = time.perf_counter()
    rng = {"q_order": cfg.q_order, "c": ["symbolic", 1]}
    failure = None
    lhs, rhs = series_entry4(C, cfg.q_order)
    if lhs != rhs:
        e = _first_series_diff(lhs, rhs)
        failure = {"c": "symbolic", "q_power": e, "lhs": lhs[e], "rhs": rhs[e]}
    if failure is None:
        # c = 1 collapses to the divisor-count series
        lhs1, rhs1 = series_entry4(1, cfg.q_order)
        d = _divisor_counts(cfg.q_order)
        for e in range(1, cfg.q_order + 1):
            if lhs1[e] != d[e] or rhs1[e] != d[e]:
                failure = {"c": 1, "q_power": e, "lhs": lhs1[e], "rhs": d[e]}
                break
    return _report(IdentityId.ENTRY4, "exact", rng, failure, t0)


def _check_uchimura(cfg: CheckConfig) -> IdentityReport:
    t0 = time.perf_counter()
    rng = {"q_order": cfg.q_order}
    failure = None
    first = series_M(1, 1, cfg.q_order)
    second = series_entry4(1, cfg.q_order)[0]
    third = series_K(1, 1, cfg.q_order)
    d = _divisor_counts(cfg.q_order)
    for name, s in (("M-form", first), ("alternating", second), ("lambert", third)):
        for e in range(1, cfg.q_order + 1):
            if s[e] != d[e]:
                failure = {"form": name, "q_power": e, "lhs": s[e], "rhs": d[e]}
                break
        if failure:
            break
    if failure is None and not (first == second == third):
        failure = {"form": "pairwise", "q_power": _first_series_diff(first, second)}
    return _report(IdentityId.UCHIMURA_TRIPLE, "exact", rng, failure, t0)


def _check_thm_1_2(cfg: CheckConfig) -> IdentityReport:
    t0 = time.perf_counter()
    rng = {"q_order": cfg.q_order, "k_max": cfg.k_fold_max}
    failure = None
    for k in range(1, cfg.k_fold_max + 1):
        a, b, c3 = series_dilcher_binomial(k, cfg.q_order)
        if a != b or a != c3:
            other = b if a != b else c3
            e = _first_series_diff(a, other)
            failure = {"k": k, "q_power": e, "lhs": a[e], "rhs": other[e]}
            break
    return _report(IdentityId.THM_1_2, "exact", rng, failure, t0)


def _check_dilcher_cm(cfg: CheckConfig) -> IdentityReport:
    t0 = time.perf_counter()
    n_max = cfg.n_max
    rng = {"n_max": n_max, "m_max": 4}
    d = _divisor_counts(n_max)
    s1 = _sigma_powers(n_max, 1)
    s2 = _sigma_powers(n_max, 2)
    s3 = _sigma_powers(n_max, 3)
    dd = _conv(d, d, n_max)
    ddd = _conv(dd, d, n_max)
    dddd = _conv(ddd, d, n_max)
    ds1 = _conv(d, s1, n_max)
    s1s1 = _conv(s1, s1, n_max)
    ds2 = _conv(d, s2, n_max)
    dds1 = _conv(dd, s1, n_max)

    def convolution_value(m: int, n: int) -> int:
        if m == 1:
            return d[n]
        if m == 2:
            return s1[n] + dd[n]
        if m == 3:
            return s2[n] + 3 * ds1[n] + ddd[n]
        return s3[n] + 3 * s1s1[n] + 4 * ds2[n] + 6 * dds1[n] + dddd[n]

    failure = None
    for m in range(1, 5):
        coeffs = series_M(m, 1, n_max)
        for n in range(1, n_max + 1):
            enumerated = sum(_sign(k) * s**m for s, _l, k in distinct_stats(n))
            formula = convolution_value(m, n)
            series_coeff = coeffs[n]
            if not (enumerated == formula == series_coeff):
                failure = {
                    "m": m,
                    "n": n,
                    "enumerated": enumerated,
                    "convolution": formula,
                    "series": series_coeff,
                }
                break
        if failure:
            break
    return _report(IdentityId.DILCHER_CM, "exact", rng, failure, t0)


def _check_eq_1_13(cfg: CheckConfig) -> IdentityReport:
    t0 = time.perf_counter()
    rng = {"n_max": cfg.n_max, "m_max": cfg.m_max, "c": "symbolic"}
    failure = None
    for m in range(1, cfg.m_max + 1):
        coeffs = series_M(m, C, cfg.n_max)
        for n in range(1, cfg.n_max + 1):
            acc: dict[int, int] = {}
            for s, _l, k in distinct_stats(n):
                acc[s] = acc.get(s, 0) + _sign(k) * s**m
            if coeffs[n] != _poly(acc):
                failure = {"m": m, "n": n, "series": coeffs[n], "weights": _poly(acc)}
                break
        if failure:
            break
    return _report(IdentityId.EQ_1_13, "exact", rng, failure, t0)


def _check_thm22_tag(cfg: CheckConfig, part: str, ident: IdentityId) -> IdentityReport:
    t0 = time.perf_counter()
    rng = {
        "m_max": cfg.m_max,
        "q_order": cfg.q_order,
        "c_values": list(cfg.c_exact),
        "part": part,
    }
    failure = None
    for c in cfg.c_exact:
        direct, via_exp, bell_pairs = _thm22_routes(cfg.m_max, cfg.q_order, c)
        if part == "exp":
            for m in range(cfg.m_max + 1):
                if direct[m] != via_exp[m]:
                    failure = {
                        "c": c,
                        "m": m,
                        "q_power": _first_series_diff(direct[m], via_exp[m]),
                    }
                    break
        else:
            for m, (lhs, rhs) in enumerate(bell_pairs, start=1):
                if lhs != rhs:
                    failure = {
                        "c": c,
                        "m": m,
                        "q_power": _first_series_diff(lhs, rhs),
                    }
                    break
        if failure:
            break
    return _report(ident, "exact", rng, failure, t0)


REGISTRY = {
    IdentityId.BS_BASIC: _check_bs_basic,
    IdentityId.BS_INT: _check_bs_int,
    IdentityId.BS_ONEVAR: _check_bs_onevar,
    IdentityId.UCHIMURA_TRIPLE: _check_uchimura,
    IdentityId.ENTRY4: _check_entry4,
    IdentityId.DILCHER_CM: _check_dilcher_cm,
    IdentityId.EQ_1_13: _check_eq_1_13,
    IdentityId.THM_1_2: _check_thm_1_2,
    IdentityId.THM_2_2_EXP: lambda cfg: _check_thm22_tag(
        cfg, "exp", IdentityId.THM_2_2_EXP
    ),
    IdentityId.THM_2_2_BELL: lambda cfg: _check_thm22_tag(
        cfg, "bell", IdentityId.THM_2_2_BELL
    ),
    IdentityId.THM_2_3: _check_thm_2_3,
    IdentityId.COR_2_4: _check_cor_2_4,
    IdentityId.COR_2_5: _check_cor_2_5,
    IdentityId.THM_2_6: _check_thm_2_6,
    IdentityId.COR_2_7: _check_cor_2_7,
    IdentityId.AGL_PTI: lambda cfg: _check_agl(cfg, scaled=False),
    IdentityId.AGL_SCALED: lambda cfg: _check_agl(cfg, scaled=True),
    IdentityId.CLASS_SUM: _check_class_sum,
}


def check_identity(ident, config: CheckConfig | None = None) -> IdentityReport:
    """Run one registered identity check and return its report.

    Unknown tags raise ValueError; requesting numeric mode for an identity
    without a numeric form raises ValueError as well.  Internal faults become
    failing reports, never silent repairs.
    """
    if config is None:
        config = CheckConfig()
    if not isinstance(ident, IdentityId):
        try:
            ident = IdentityId(str(ident).lower())
        except ValueError:
            raise ValueError(f"unknown identity tag: {ident!r}") from None
    if config.mode not in ("exact", "numeric"):
        raise ValueError(f"unknown mode: {config.mode!r}")
    if config.mode == "numeric" and ident not in NUMERIC_CAPABLE:
        raise ValueError(f"identity {ident.value} has no numeric mode")
    checker = REGISTRY[ident]
    t0 = time.perf_counter()
    try:
        return checker(config)
    except AlgorithmFault as fault:
        return _report(ident, config.mode, {"n_max": config.n_max}, {"fault": str(fault)}, t0)


def run_all(config: CheckConfig | None = None, include_numeric: bool = True):
    """Exact reports for every tag, then numeric reports where defined."""
    if config is None:
        config = CheckConfig()
    exact_cfg = replace(config, mode="exact")
    reports = [check_identity(ident, exact_cfg) for ident in IdentityId]
    if include_numeric:
        numeric_cfg = replace(config, mode="numeric")
        reports += [
            check_identity(ident, numeric_cfg)
            for ident in IdentityId
            if ident in NUMERIC_CAPABLE
        ]
    return reports
