"""Gaussian-signaling rates on the parallel-link model.

Used to check dof arithmetic numerically: rates and leakage caps are
evaluated over a power sweep and their slopes against ``log2 p`` are
compared with the corner points of the region.
"""
import csv
import enum
import io
from dataclasses import dataclass

import numpy as np

from .exceptions import InfeasibleAllocation

DEFAULT_POWERS = tuple(2.0 ** k for k in range(20, 41, 4))


class Target(enum.Enum):
    P3 = "P3"
    P4 = "P4"


@dataclass(frozen=True)
class Custom:
    t1: int
    t2: int


@dataclass(frozen=True)
class SignalingScheme:
    """Dimension split with explicit, disjoint 1-based link indices.

    Links are numbered A first, then B, then C.
    """

    t1: int
    t2: int
    links1: tuple
    links2: tuple

    def __post_init__(self):
        if len(self.links1) != self.t1 or len(self.links2) != self.t2:
            raise InfeasibleAllocation("link lists do not match (t1, t2)")
        if set(self.links1) & set(self.links2):
            raise InfeasibleAllocation("users share a link")


def allocate(model, target):
    """Place user 1 on A then the head of B, user 2 on C then the tail of B.

    Parameters
    ----------
    model : ParallelModel
    target : Target or Custom
        ``P3`` gives ``(|A|+|B|, |C|)`` and ``P4`` gives ``(|A|, |B|+|C|)``.

    Raises
    ------
    InfeasibleAllocation
        If ``t1 > |A|+|B|``, ``t2 > |B|+|C|`` or ``t1 + t2 > r0``.
    """
    a, b, c = model.a_size, model.b_size, model.c_size
    if target is Target.P3:
        t1, t2 = a + b, c
    elif target is Target.P4:
        t1, t2 = a, b + c
    elif isinstance(target, Custom):
        t1, t2 = target.t1, target.t2
    else:
        raise InfeasibleAllocation(f"unknown allocation target {target!r}")
    if min(t1, t2) < 0:
        raise InfeasibleAllocation(f"dimensions must be nonnegative, got ({t1}, {t2})")
    if t1 > a + b:
        raise InfeasibleAllocation(f"t1 <= |A|+|B| violated: {t1} > {a + b}")
    if t2 > b + c:
        raise InfeasibleAllocation(f"t2 <= |B|+|C| violated: {t2} > {b + c}")
    if t1 + t2 > model.r0:
        raise InfeasibleAllocation(f"t1 + t2 <= r0 violated: {t1 + t2} > {model.r0}")
    r0 = model.r0
    links1 = tuple(range(1, t1 + 1))
    links2 = tuple(range(r0 - t2 + 1, r0 + 1))
    return SignalingScheme(t1, t2, links1, links2)


def _per_link_power(p, t):
    return p / t if t else 0.0


def legit_rate(scheme, p, model):
    """Per-user rates ``t_k * log2(1 + (p/t_k) / N0)`` with ``N0 = (sigma/s_bar)^2``.

    The users occupy disjoint links, so each sees only noise.
    """
    if p <= 0:
        raise ValueError(f"power must be positive, got {p}")
    n0 = model.noise_power
    return tuple(t * np.log2(1.0 + _per_link_power(p, t) / n0) if t else 0.0
                 for t in (scheme.t1, scheme.t2))


def leakage_cap(scheme, p, n_e, norm_bound=1.0, eps=1.0):
    """Worst-case leakage to an ``n_e``-antenna eavesdropper, per user.

    Supremum of ``log2 det(I + H K H^H / eps^2)`` over ``H`` with ``n_e`` rows
    and spectral norm at most ``norm_bound``, for the uniform input
    covariance ``K``.  Equal to ``min(n_e, t) * log2(1 + nb^2 (p/t) / eps^2)``.
    """
    if norm_bound <= 0 or eps <= 0:
        raise ValueError("norm_bound and eps must be positive")
    out = []
    for t in (scheme.t1, scheme.t2):
        k = min(n_e, t)
        out.append(k * np.log2(1.0 + norm_bound ** 2 * _per_link_power(p, t) / eps ** 2)
                   if k else 0.0)
    return tuple(out)


@dataclass(frozen=True)
class SweepResult:
    powers: tuple
    legit_rates: tuple
    leakage_caps: tuple
    secrecy_rates: tuple
    fitted_slopes: tuple

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["log2_p", "r1_legit", "r2_legit", "r1_leak", "r2_leak", "r1_sec", "r2_sec"])
        for i, p in enumerate(self.powers):
            row = [np.log2(p), self.legit_rates[0][i], self.legit_rates[1][i],
                   self.leakage_caps[0][i], self.leakage_caps[1][i],
                   self.secrecy_rates[0][i], self.secrecy_rates[1][i]]
            w.writerow([format(float(x), ".17g") for x in row])
        return buf.getvalue()


def fit_slope(powers, values):
    """OLS slope of ``values`` against ``log2(powers)`` on the upper half."""
    n = len(powers)
    start = min(n // 2, n - 2)
    x = np.log2(np.asarray(powers[start:], dtype=float))
    y = np.asarray(values[start:], dtype=float)
    return float(np.polyfit(x, y, 1)[0])


def sweep(model, scheme, powers=DEFAULT_POWERS, norm_bound=1.0, eps=1.0):
    """Rates, leakage caps and secrecy rates over ``powers``, with prelog fits."""
    powers = tuple(float(p) for p in powers)
    if len(powers) < 2:
        raise ValueError("a sweep needs at least two powers")
    if any(q <= p for p, q in zip(powers, powers[1:])) or powers[0] <= 0:
        raise ValueError("powers must be positive and strictly increasing")
    legit = np.array([legit_rate(scheme, p, model) for p in powers]).T
    leak = np.array([leakage_cap(scheme, p, model.n_e, norm_bound, eps) for p in powers]).T
    sec = np.maximum(0.0, legit - leak)
    slopes = tuple(fit_slope(powers, sec[k]) for k in range(2))
    as_lists = lambda arr: tuple(tuple(float(v) for v in row) for row in arr)
    return SweepResult(powers, as_lists(legit), as_lists(leak), as_lists(sec), slopes)
