"""Additive character sums over orbit x-coordinates.

The character psi_lambda(z) = exp(2*pi*i*lambda*z/p) is always read from a
precomputed table of the p-th roots of unity; reductions happen mod p (and
mod T for orbit indices) before any table lookup. Sums are accumulated by
numpy, whose pairwise reduction keeps roundoff benign at desk scale.

Orthogonality, (1/p) * sum_lambda psi_lambda(z) = [z = 0], is what turns
solution counting into the factored spectra in solutions_via_characters.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import CapExceeded, DomainError, TrivialCharacter
from .orbit import OrbitTable
from .sumprod import check_unit_subset, product_index_set, sum_set
from .residue import inv_mod

# Full scans touch every lambda in [1, p-1]; keep them desk-sized.
SCAN_CAP = 100_000


@lru_cache(maxsize=32)
def roots_of_unity(p: int) -> np.ndarray:
    """Read-only table of exp(2*pi*i*j/p) for j = 0 .. p-1."""
    table = np.exp(2j * np.pi * np.arange(p) / p)
    table.flags.writeable = False
    return table


def psi(lam: int, z: int, p: int) -> complex:
    """psi_lambda(z) = exp(2*pi*i*lambda*z/p)."""
    return complex(roots_of_unity(p)[lam * z % p])


def _weight_vector(weights, members) -> np.ndarray | None:
    """Materialize an optional weight map over a member tuple; |w| <= 1."""
    if weights is None:
        return None
    vec = np.array([complex(weights.get(m, 1.0)) for m in members])
    if np.any(np.abs(vec) > 1 + 1e-9):
        raise ValueError("weights must have modulus at most 1")
    return vec


def bilinear_sum(table: OrbitTable, k_set, m_set, lam: int,
                 rho=None, theta=None) -> float:
    """sum over k of | rho(k) * sum over m of theta(m) * psi_lambda(x(kmP)) |.

    k*m mod T never hits 0 for unit k, m, so every index has an
    x-coordinate. Default weights are the constant 1; pass dicts keyed by
    set members to override (moduli must stay <= 1).
    """
    t, p = table.order, table.p
    k_set = check_unit_subset(k_set, t)
    m_set = check_unit_subset(m_set, t)
    if not k_set or not m_set:
        return 0.0
    xs = np.array(table.xs, dtype=np.int64)
    ks = np.array(k_set, dtype=np.int64)
    ms = np.array(m_set, dtype=np.int64)
    xmat = xs[(ks[:, None] * ms[None, :]) % t - 1]
    phases = roots_of_unity(p)[lam % p * xmat % p]
    theta_vec = _weight_vector(theta, m_set)
    if theta_vec is not None:
        phases = phases * theta_vec[None, :]
    inner = phases.sum(axis=1)
    rho_vec = _weight_vector(rho, k_set)
    if rho_vec is not None:
        inner = inner * rho_vec
    return float(np.abs(inner).sum())


def bilinear_sum_bound(nu: int, size_k: int, size_m: int, order: int, q: int) -> float:
    """The analytic ceiling the bilinear sums are measured against.

    (#K)^(1 - 1/(2 nu)) * (#M)^((nu+1)/(nu+2)) * T^((nu+1)/(nu(nu+2)))
    * q^(1/(4(nu+2))) * (ln q)^(1/(nu+2)), natural logarithm. As nu grows
    the #K exponent climbs to 1.
    """
    if nu < 1:
        raise DomainError(f"nu must be >= 1, got {nu}")
    if size_k < 1 or size_m < 1 or order < 1:
        raise DomainError("set sizes and the point order must be positive")
    if q < 2:
        raise DomainError(f"field size must be >= 2, got {q}")
    return (
        size_k ** (1 - 1 / (2 * nu))
        * size_m ** ((nu + 1) / (nu + 2))
        * order ** ((nu + 1) / (nu * (nu + 2)))
        * q ** (1 / (4 * (nu + 2)))
        * math.log(q) ** (1 / (nu + 2))
    )


@dataclass(frozen=True)
class CharSumReport:
    """Largest bilinear sum seen over a full nontrivial-character scan."""

    nu: int
    lam: int  # smallest lambda attaining the max
    value: float
    rhs: float
    ratio: float


def bilinear_ratio_scan(table: OrbitTable, k_set, m_set, nu: int,
                        cap: int = SCAN_CAP) -> CharSumReport:
    """Scan every lambda in [1, p-1] with unit weights; report the max.

    Deterministic by construction: lambdas ascend and only a strictly
    larger value moves the argmax, so ties keep the smallest lambda.
    """
    t, p = table.order, table.p
    if p > cap:
        raise CapExceeded(f"full character scan needs p <= {cap}, got {p}")
    k_set = check_unit_subset(k_set, t)
    m_set = check_unit_subset(m_set, t)
    if not k_set or not m_set:
        raise DomainError("scan needs nonempty K and M")
    rhs = bilinear_sum_bound(nu, len(k_set), len(m_set), t, p)
    xs = np.array(table.xs, dtype=np.int64)
    ks = np.array(k_set, dtype=np.int64)
    ms = np.array(m_set, dtype=np.int64)
    xmat = xs[(ks[:, None] * ms[None, :]) % t - 1]
    roots = roots_of_unity(p)
    block = max(1, (1 << 18) // max(1, xmat.size))
    best_val, best_lam = -1.0, 0
    for start in range(1, p, block):
        lams = np.arange(start, min(start + block, p), dtype=np.int64)
        idx = lams[:, None, None] * xmat[None, :, :] % p
        vals = np.abs(roots[idx].sum(axis=2)).sum(axis=1)
        i = int(np.argmax(vals))
        if float(vals[i]) > best_val:
            best_val, best_lam = float(vals[i]), int(lams[i])
    return CharSumReport(nu=nu, lam=best_lam, value=best_val, rhs=rhs, ratio=best_val / rhs)


def subgroup_sum(table: OrbitTable, lam: int) -> complex:
    """sum over k = 1 .. T-1 of psi_lambda(x(kP)) for a nontrivial character.

    The value is genuinely complex in general: x(kP) = x((T-k)P) makes the
    paired terms equal, not conjugate, so no cancellation of imaginary
    parts is implied. |sum| <= T - 1 always holds.
    """
    p = table.p
    if lam % p == 0:
        raise TrivialCharacter("subgroup sum over the trivial character is just T - 1")
    xs = np.array(table.xs, dtype=np.int64)
    return complex(roots_of_unity(p)[lam % p * xs % p].sum())


@dataclass(frozen=True)
class SubgroupScanReport:
    """Empirical size of the largest subgroup character sum for one curve."""

    max_abs: float
    lam: int  # smallest lambda attaining the max
    max_over_sqrt_p: float  # the quantity the square-root barrier talks about


def subgroup_scan(table: OrbitTable, cap: int = SCAN_CAP) -> SubgroupScanReport:
    """Max of |subgroup_sum| over every nontrivial lambda."""
    p = table.p
    if p > cap:
        raise CapExceeded(f"full character scan needs p <= {cap}, got {p}")
    xs = np.array(table.xs, dtype=np.int64)
    roots = roots_of_unity(p)
    block = max(1, (1 << 18) // max(1, xs.size))
    best_val, best_lam = -1.0, 0
    for start in range(1, p, block):
        lams = np.arange(start, min(start + block, p), dtype=np.int64)
        sums = roots[lams[:, None] * xs[None, :] % p].sum(axis=1)
        vals = np.abs(sums)
        i = int(np.argmax(vals))
        if float(vals[i]) > best_val:
            best_val, best_lam = float(vals[i]), int(lams[i])
    return SubgroupScanReport(max_abs=best_val, lam=best_lam,
                              max_over_sqrt_p=best_val / math.sqrt(p))


def _spectrum(p: int, values: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """sum_j weights[j] * psi_lambda(values[j]) for every lambda in [0, p)."""
    roots = roots_of_unity(p)
    lams = np.arange(p, dtype=np.int64)[:, None]
    out = np.zeros(p, dtype=complex)
    chunk = max(1, (1 << 19) // p)
    for start in range(0, len(values), chunk):
        v = values[start:start + chunk]
        out += roots[lams * v[None, :] % p] @ weights[start:start + chunk]
    return out


def solutions_spectrum(table: OrbitTable, a_set, b_set) -> complex:
    """The character-expansion value of the quadruple count J.

    Expanding the indicator of x(h b1^-1 P) + x(b2 P) - u = 0 through
    orthogonality factors J into three spectra:

        J = (1/p) * sum_lambda S1(lam) * S2(lam) * conj(S3(lam))

    with S1 over the (b1, h) population, S2 over B, S3 over the sum set;
    only the u-factor enters with a minus sign. Pairing lambda with
    p - lambda conjugates every factor, so the total is real up to
    roundoff; callers usually want solutions_via_characters.
    """
    t, p = table.order, table.p
    a_set = check_unit_subset(a_set, t)
    b_set = check_unit_subset(b_set, t)
    if not a_set or not b_set:
        return 0j
    xs = np.array(table.xs, dtype=np.int64)
    h_set = np.array(product_index_set(a_set, b_set, t), dtype=np.int64)
    bs = np.array(b_set, dtype=np.int64)
    inv_b = np.array([inv_mod(b, t) for b in b_set], dtype=np.int64)

    x_hb1 = xs[(h_set[None, :] * inv_b[:, None]) % t - 1].ravel()
    counts1 = np.bincount(x_hb1, minlength=p)
    support1 = np.nonzero(counts1)[0].astype(np.int64)
    s1 = _spectrum(p, support1, counts1[support1].astype(complex))

    counts2 = np.bincount(xs[bs - 1], minlength=p)
    support2 = np.nonzero(counts2)[0].astype(np.int64)
    s2 = _spectrum(p, support2, counts2[support2].astype(complex))

    s_vals = np.array(sum_set(table, a_set, b_set), dtype=np.int64)
    s3 = _spectrum(p, s_vals, np.ones(len(s_vals), dtype=complex))

    return complex((s1 * s2 * np.conj(s3)).sum() / p)


def solutions_via_characters(table: OrbitTable, a_set, b_set) -> float:
    """J evaluated through the full character expansion (real part)."""
    return solutions_spectrum(table, a_set, b_set).real
