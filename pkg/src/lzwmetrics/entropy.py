"""Entropy estimators and analytic entropy rates for generator processes.

Block entropies are plug-in estimates over overlapping q-grams; the order-q
conditional entropy is the difference of consecutive block entropies,
clamped at zero.  All values are in bits.  For synthetic processes whose law
is known exactly, :func:`analytic_entropy_rate` returns the true entropy
rate, which the conditional-entropy estimates (and the LZW compression
ratio) approach from above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .sequence import SymbolSequence

if TYPE_CHECKING:
    from .generators import ProcessSpec

__all__ = [
    "EntropyProfile",
    "DegenerateProcessError",
    "Q_MAX_LIMIT",
    "h0_bernoulli",
    "empirical_h0",
    "empirical_block_entropy",
    "empirical_hq",
    "entropy_profile",
    "analytic_entropy_rate",
    "stationary_distribution",
]

# q-gram tables grow as A**q; beyond this order the estimates are noise at
# any realistic n and the tables stop fitting in memory.
Q_MAX_LIMIT = 16

_POWER_TOL = 1e-12
_POWER_MAX_ITERS = 10**6
_UNIQUENESS_TOL = 1e-9


class DegenerateProcessError(ValueError):
    """The process has no unique stationary distribution."""


@dataclass(frozen=True)
class EntropyProfile:
    """Univariate entropy plus conditional entropies of orders 1..q_max.

    ``hq[i]`` estimates H(X_{q+1} | X_1..X_q) for q = i + 1; the chain
    h0 >= hq[0] >= hq[1] >= ... holds for the true process quantities and,
    within estimation error, for these plug-in values.
    """

    h0: float
    hq: tuple[float, ...]
    q_max: int


def h0_bernoulli(p: float) -> float:
    """Binary entropy -p*log2(p) - (1-p)*log2(1-p), with 0 log 0 = 0."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def _entropy_bits(counts: np.ndarray, total: int) -> float:
    probs = counts / total
    return float(-(probs * np.log2(probs)).sum())


def empirical_h0(seq: SymbolSequence) -> float:
    """Shannon entropy (bits) of the empirical symbol histogram."""
    counts = np.bincount(seq.data, minlength=seq.alphabet.size)
    counts = counts[counts > 0]
    return _entropy_bits(counts, len(seq))


def empirical_block_entropy(seq: SymbolSequence, q: int) -> float:
    """Entropy (bits) of the empirical distribution of overlapping q-grams.

    All n-q+1 windows count, so consecutive orders share their sample
    positions up to boundary terms.  Grams are packed into int64 words when
    A**q allows it; wider grams fall back to row-wise counting.
    """
    n = len(seq)
    if q < 1:
        raise ValueError(f"block order must be at least 1, got {q}")
    if q > n:
        raise ValueError(f"block order {q} exceeds sequence length {n}")
    A = seq.alphabet.size
    data = seq.data
    total = n - q + 1
    if q == 1:
        counts = np.bincount(data, minlength=A)
        counts = counts[counts > 0]
        return _entropy_bits(counts, total)
    if q * math.log2(A) <= 62:
        grams = np.zeros(total, dtype=np.int64)
        for j in range(q):
            grams *= A
            grams += data[j : j + total]
        _, counts = np.unique(grams, return_counts=True)
    else:
        windows = np.lib.stride_tricks.sliding_window_view(data, q)
        _, counts = np.unique(windows, axis=0, return_counts=True)
    return _entropy_bits(counts, total)


def empirical_hq(seq: SymbolSequence, q: int) -> float:
    """Plug-in conditional entropy H(X_{q+1} | X_1..X_q) in bits.

    Computed as the difference of consecutive block entropies and clamped
    below at zero: finite samples can make the raw difference slightly
    negative, which is meaningless for a conditional entropy.
    """
    n = len(seq)
    if not 1 <= q <= n - 1:
        raise ValueError(f"order q must lie in 1..{n - 1}, got {q}")
    diff = empirical_block_entropy(seq, q + 1) - empirical_block_entropy(seq, q)
    return max(0.0, diff)


def entropy_profile(seq: SymbolSequence, q_max: int) -> EntropyProfile:
    """Bundle :func:`empirical_h0` with conditional entropies up to q_max."""
    n = len(seq)
    if q_max < 1:
        raise ValueError(f"q_max must be at least 1, got {q_max}")
    limit = min(n - 1, Q_MAX_LIMIT)
    if q_max > limit:
        raise ValueError(f"q_max {q_max} exceeds min(n - 1, {Q_MAX_LIMIT}) = {limit}")
    blocks = [empirical_block_entropy(seq, q) for q in range(1, q_max + 2)]
    hq = tuple(max(0.0, hi - lo) for lo, hi in zip(blocks, blocks[1:]))
    return EntropyProfile(h0=empirical_h0(seq), hq=hq, q_max=q_max)


def stationary_distribution(
    transition_table: np.ndarray, alphabet_size: int, order: int
) -> np.ndarray:
    """Stationary law of the composite-state chain behind an order-m table.

    ``transition_table`` holds one next-symbol distribution per A**m
    composite state; the induced state chain shifts the oldest symbol out
    and the sampled one in.  Damped power iteration (averaging each iterate
    with its successor keeps the fixed points and suppresses period-2
    oscillation) runs from two different starts; disagreement between the
    limits, or failure to converge, means there is no unique stationary
    distribution and :class:`DegenerateProcessError` is raised.
    """
    table = np.asarray(transition_table, dtype=np.float64)
    n_states = alphabet_size**order
    if table.shape != (n_states, alphabet_size):
        raise ValueError(
            f"transition table must have shape ({n_states}, {alphabet_size}), "
            f"got {table.shape}"
        )
    keep = alphabet_size ** (order - 1)
    targets = (
        (np.arange(n_states) % keep)[:, None] * alphabet_size
        + np.arange(alphabet_size)[None, :]
    ).ravel()

    def step(pi: np.ndarray) -> np.ndarray:
        flow = (pi[:, None] * table).ravel()
        return np.bincount(targets, weights=flow, minlength=n_states)

    def iterate(pi: np.ndarray) -> np.ndarray:
        for _ in range(_POWER_MAX_ITERS):
            new = 0.5 * (pi + step(pi))
            new /= new.sum()
            if np.abs(new - pi).sum() <= _POWER_TOL:
                return new
            pi = new
        raise DegenerateProcessError(
            "power iteration did not converge to a stationary distribution"
        )

    uniform = np.full(n_states, 1.0 / n_states)
    skewed = np.zeros(n_states)
    skewed[0] = 1.0
    pi_a = iterate(uniform)
    pi_b = iterate(skewed)
    if np.abs(pi_a - pi_b).sum() > _UNIQUENESS_TOL:
        raise DegenerateProcessError("stationary distribution is not unique")
    return pi_a


def _row_entropy_bits(row: np.ndarray) -> float:
    probs = row[row > 0]
    return float(-(probs * np.log2(probs)).sum())


def analytic_entropy_rate(spec: "ProcessSpec") -> float:
    """Exact entropy rate in bits/symbol of a generator specification.

    Bernoulli(p) has rate equal to the binary entropy of p; an order-m
    Markov chain has rate sum_s pi(s) * H(row_s) with pi its stationary
    distribution; periodic and constant processes are deterministic and
    have rate 0.
    """
    kind = spec.kind
    if kind == "bernoulli":
        return h0_bernoulli(spec.p)
    if kind == "markov":
        table = np.asarray(spec.transition_table, dtype=np.float64)
        pi = stationary_distribution(table, spec.alphabet_size, spec.order)
        row_h = np.array([_row_entropy_bits(row) for row in table])
        return float(pi @ row_h)
    if kind in ("periodic", "constant"):
        return 0.0
    raise ValueError(f"unknown process kind: {kind!r}")
