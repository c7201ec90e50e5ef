"""The small-sum-set construction and the sieve identity behind it.

Pick the units a of Z_T whose orbit x-coordinate falls below a window H.
Sums of two such x-values live in [0, 2H-2], so the sum set is small by
fiat; the product set can never exceed phi(T). The interesting quantity is
how max(#S, #T) compares to sqrt(p * #A).
"""

import math
from dataclasses import dataclass

import numpy as np

from .charsum import roots_of_unity
from .orbit import OrbitTable
from .residue import divisors, euler_phi, mobius, units_of
from .sumprod import prod_set, sum_set


def units_with_x_below(table: OrbitTable, window: int) -> tuple[int, ...]:
    """Units a of Z_T with x(aP) < window, sorted."""
    if window < 0:
        raise ValueError("window must be nonnegative")
    xs = table.xs
    return tuple(a for a in units_of(table.order) if xs[a - 1] < window)


@dataclass(frozen=True)
class ExtremalReport:
    """Sizes and bound checks for one window construction A = B."""

    h_window: int
    size_a: int
    size_s: int
    size_t: int
    bound_2h_ok: bool | None  # #S <= 2H-1; only meaningful without wraparound
    bound_phi_ok: bool  # #T <= phi(T), always applicable
    ratio: float | None  # max(#S, #T) / sqrt(p * #A); absent when A is empty
    predicted_size_a: float  # phi(T)^2 / (2p), the expected #A at H = phi(T)/2


def extremal_report(table: OrbitTable, window: int | None = None) -> ExtremalReport:
    """Run the construction at the given window (default floor(phi(T)/2)).

    An empty A is reported, not raised: sizes are zero and the ratio is
    absent. bound_2h_ok is None when 2H - 2 wraps past p, since the
    interval argument says nothing there.
    """
    t, p = table.order, table.p
    phi = euler_phi(t)
    if window is None:
        window = phi // 2
    a_set = units_with_x_below(table, window)
    if a_set:
        s_vals = sum_set(table, a_set, a_set)
        t_vals = prod_set(table, a_set, a_set)
    else:
        s_vals, t_vals = (), ()
    bound_2h = None
    if 2 * window - 2 < p:
        bound_2h = len(s_vals) <= max(0, 2 * window - 1)
    ratio = None
    if a_set:
        ratio = max(len(s_vals), len(t_vals)) / math.sqrt(p * len(a_set))
    return ExtremalReport(
        h_window=window,
        size_a=len(a_set),
        size_s=len(s_vals),
        size_t=len(t_vals),
        bound_2h_ok=bound_2h,
        bound_phi_ok=len(t_vals) <= phi,
        ratio=ratio,
        predicted_size_a=phi * phi / (2 * p),
    )


def mobius_identity_residual(table: OrbitTable, lam: int) -> float:
    """|LHS - RHS| of the unit-orbit sieve at character lambda.

    LHS sums psi_lambda(x(aP)) over the units a of Z_T. RHS sieves by
    divisors d of T with Mobius weights, summing psi over the multiples of
    d below T. Identity-point terms are omitted on both sides; their
    would-be contributions carry total weight sum_{d | T} mu(d) = 0 for
    T >= 2, so the identity is exact as computed. lambda = 0 degenerates
    to phi(T) = sum_{d | T} mu(d) (T/d - 1).
    """
    t, p = table.order, table.p
    if t < 2:
        raise ValueError("identity needs order >= 2")
    xs = np.array(table.xs, dtype=np.int64)
    roots = roots_of_unity(p)
    lam %= p
    units = np.array(units_of(t), dtype=np.int64)
    lhs = roots[lam * xs[units - 1] % p].sum()
    rhs = 0j
    for d in divisors(t):
        mu = mobius(d)
        if mu == 0:
            continue
        multiples = np.arange(d, t, d, dtype=np.int64)  # b*d, b = 1 .. t/d - 1
        rhs += mu * roots[lam * xs[multiples - 1] % p].sum()
    return float(abs(lhs - rhs))
