"""Classical Renyi, Shannon, and Tsallis entropies, plain and conditional.

Renyi and Shannon quantities are in bits.  Tsallis quantities follow the
natural-log convention of the deformed logarithm ``ln_q``.  Conditional
entropies use the Arimoto form, built from the alpha-norm of the
conditional distribution for each value of the conditioning variable:

    H_a(X|Y) = a/(1-a) * log2( sum_y p(y) * ||p(.|y)||_a )

The conditioning variable is always the *second* axis of a joint table.
Orders 0, 1/2, 1 and infinity dispatch to closed forms; everything else
goes through a numerically careful generic evaluator (expm1/log1p near
order one, max-factoring for large orders).
"""

from __future__ import annotations

import math

import numpy as np

from .config import DEFAULT_TOLS, Tolerances

# Orders within this window of 1 are routed to the Shannon closed form.
ALPHA_ONE_WINDOW = 1e-9

_LN2 = math.log(2.0)


class NoDualOrderError(ValueError):
    """The Renyi order has no dual partner under 1/a + 1/b = 2."""


def as_distribution(probs, tol: Tolerances | None = None) -> np.ndarray:
    """Validate and return a probability vector, clamping tiny negativity."""
    t = tol or DEFAULT_TOLS
    p = np.asarray(probs, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise ValueError("a distribution must be a nonempty 1-d vector")
    if p.min() < -t.prob_negativity:
        raise ValueError(f"distribution has negative entry {p.min():.3e}")
    total = p.sum()
    if abs(total - 1.0) > t.prob_sum:
        raise ValueError(f"distribution sums to {total!r}, not 1")
    return np.clip(p, 0.0, None)


class JointDistribution:
    """Joint probability table p(x, y); conditioning acts on the second axis.

    Entries may carry tiny negative noise from Born-rule arithmetic; anything
    above ``-prob_negativity`` is clamped to zero, larger negativity is
    rejected.  The table is stored read-only.
    """

    __slots__ = ("table",)

    def __init__(self, table, tol: Tolerances | None = None):
        t = tol or DEFAULT_TOLS
        arr = np.array(table, dtype=float)
        if arr.ndim != 2 or arr.size == 0:
            raise ValueError("a joint distribution must be a nonempty 2-d table")
        if arr.min() < -t.prob_negativity:
            raise ValueError(f"joint table has negative entry {arr.min():.3e}")
        arr = np.clip(arr, 0.0, None)
        total = arr.sum()
        if abs(total - 1.0) > t.prob_sum:
            raise ValueError(f"joint table sums to {total!r}, not 1")
        arr.setflags(write=False)
        self.table = arr

    @property
    def shape(self) -> tuple[int, int]:
        return self.table.shape

    def marginal_x(self) -> np.ndarray:
        return self.table.sum(axis=1)

    def marginal_y(self) -> np.ndarray:
        return self.table.sum(axis=0)

    def swapped(self) -> "JointDistribution":
        """The same joint with the roles of the two variables exchanged."""
        return JointDistribution(self.table.T)

    def __repr__(self) -> str:
        return f"JointDistribution(shape={self.table.shape})"


def _as_table(joint) -> np.ndarray:
    if isinstance(joint, JointDistribution):
        return joint.table
    return JointDistribution(joint).table


def dual_order(alpha: float) -> float:
    """Dual Renyi order b with 1/a + 1/b = 2; defined for a >= 1/2."""
    if not alpha >= 0.5:
        raise NoDualOrderError(f"no dual order for alpha={alpha!r} < 1/2")
    if alpha == 0.5:
        return math.inf
    if math.isinf(alpha):
        return 0.5
    return alpha / (2.0 * alpha - 1.0)


def _check_order(alpha: float) -> float:
    alpha = float(alpha)
    if math.isnan(alpha) or alpha < 0.0:
        raise ValueError(f"Renyi order must be >= 0, got {alpha!r}")
    return alpha


def _shannon_bits(p: np.ndarray) -> float:
    p = p[p > 0.0]
    return float(-np.sum(p * np.log2(p)))


def _renyi_generic(p: np.ndarray, alpha: float) -> float:
    """(1/(1-a)) log2 sum p^a for a > 0, a != 1, finite."""
    p = p[p > 0.0]
    if alpha < 2.0:
        # sum p^a - 1 evaluated without cancellation: p^a = p * e^{(a-1) ln p}
        d = float(np.sum(p * np.expm1((alpha - 1.0) * np.log(p))))
        return math.log1p(d) / ((1.0 - alpha) * _LN2)
    m = float(p.max())
    s = float(np.sum((p / m) ** alpha))
    return (alpha * math.log(m) + math.log(s)) / ((1.0 - alpha) * _LN2)


def renyi_entropy(probs, alpha: float) -> float:
    """Renyi entropy of order ``alpha`` in bits.

    Order 1 is the Shannon limit, order infinity the min-entropy
    ``-log2 max p``, order 0 the logarithm of the support size.
    """
    alpha = _check_order(alpha)
    p = as_distribution(probs)
    if alpha == 0.0:
        return float(np.log2(np.count_nonzero(p > 0.0)))
    if math.isinf(alpha):
        return float(-np.log2(p.max()))
    if abs(alpha - 1.0) < ALPHA_ONE_WINDOW:
        return _shannon_bits(p)
    return _renyi_generic(p, alpha)


def _column_conditionals(table: np.ndarray):
    """Yield (weight, conditional) for every column with positive weight."""
    p_y = table.sum(axis=0)
    for y in range(table.shape[1]):
        if p_y[y] > 0.0:
            yield p_y[y], table[:, y] / p_y[y]


def _conditional_shannon(table: np.ndarray) -> float:
    return float(sum(w * _shannon_bits(c) for w, c in _column_conditionals(table)))


def _conditional_min_entropy(table: np.ndarray) -> float:
    # sum_y p(y) max_x p(x|y) telescopes to a column-max sum.
    return float(-np.log2(table.max(axis=0).sum()))


def _conditional_max_entropy(table: np.ndarray) -> float:
    # sum_y p(y) (sum_x sqrt p(x|y))^2 telescopes likewise.
    return float(np.log2(np.sum(np.sqrt(table).sum(axis=0) ** 2)))


def _conditional_renyi_generic(table: np.ndarray, alpha: float) -> float:
    """Arimoto form evaluated directly; valid for alpha > 0, finite, != 1.

    Exposed separately so the dispatch boundary can be probed: this path
    agrees with the Shannon and min-entropy closed forms in the limits.
    """
    if alpha < 2.0:
        # Track sums relative to 1 so that alpha near 1 stays well conditioned.
        excess = 0.0
        for w, c in _column_conditionals(table):
            c = c[c > 0.0]
            d = float(np.sum(c * np.expm1((alpha - 1.0) * np.log(c))))
            log_norm = math.log1p(d) / alpha
            excess += w * math.expm1(log_norm)
        return alpha / (1.0 - alpha) * math.log1p(excess) / _LN2
    total = 0.0
    for w, c in _column_conditionals(table):
        c = c[c > 0.0]
        m = float(c.max())
        s = float(np.sum((c / m) ** alpha))
        total += w * m * s ** (1.0 / alpha)
    return alpha / (1.0 - alpha) * math.log2(total)


def conditional_renyi(joint, alpha: float) -> float:
    """Arimoto conditional Renyi entropy H_a(X|Y) in bits.

    ``joint`` is a :class:`JointDistribution` (or table) over (X, Y); the
    conditioning variable Y is the second axis.  Columns with zero marginal
    weight are skipped.
    """
    alpha = _check_order(alpha)
    table = _as_table(joint)
    if alpha == 0.0:
        support = max(
            int(np.count_nonzero(c > 0.0)) for _, c in _column_conditionals(table)
        )
        return float(np.log2(support))
    if math.isinf(alpha):
        return _conditional_min_entropy(table)
    if abs(alpha - 1.0) < ALPHA_ONE_WINDOW:
        return _conditional_shannon(table)
    if alpha == 0.5:
        return _conditional_max_entropy(table)
    return _conditional_renyi_generic(table, alpha)


def _check_tsallis_order(q: float) -> float:
    q = float(q)
    if not q > 0.0:
        raise ValueError(f"Tsallis order must be positive, got {q!r}")
    if q == 1.0:
        raise ValueError("Tsallis order q=1 is excluded; use a Shannon entropy")
    return q


def _tsallis_nats(p: np.ndarray, q: float) -> float:
    p = p[p > 0.0]
    # (sum p^q - 1)/(1-q) without cancellation near q=1.
    d = float(np.sum(p * np.expm1((q - 1.0) * np.log(p))))
    return -d / (q - 1.0)


def tsallis_entropy(probs, q: float) -> float:
    """Tsallis q-entropy in nats: -sum_x p(x)^q ln_q p(x)."""
    q = _check_tsallis_order(q)
    return _tsallis_nats(as_distribution(probs), q)


def conditional_tsallis(joint, q: float) -> float:
    """Conditional Tsallis entropy sum_y p(y)^q S_q(X|Y=y), in nats."""
    q = _check_tsallis_order(q)
    table = _as_table(joint)
    return float(
        sum(w**q * _tsallis_nats(c, q) for w, c in _column_conditionals(table))
    )
