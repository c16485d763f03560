"""Seeded synthetic stochastic processes with known entropy rates.

These generators serve double duty: verification oracles for the
convergence of LZW description length toward the entropy rate, and demo
sources for the command line.  Every ``generate`` call is a pure function
of (spec, n, seed); periodic and constant kinds consume no randomness at
all.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

from .entropy import analytic_entropy_rate, stationary_distribution
from .sequence import Alphabet, SymbolSequence

__all__ = [
    "ProcessSpec",
    "symmetric_binary_markov",
    "generate",
    "spec_entropy_rate",
]

# Composite-state count cap for order-m chains; A**m beyond this makes the
# stationary-distribution computation and sampling tables unreasonable.
_MAX_STATES = 65536

_ROW_SUM_TOL = 1e-12


@dataclass(frozen=True)
class ProcessSpec:
    """Parameterization of one synthetic process.

    ``kind`` selects the family and the matching fields must be set:
    ``bernoulli`` needs ``p``, ``markov`` needs ``order`` and a row-stochastic
    ``transition_table`` over A**order states by A symbols, ``periodic``
    needs ``pattern``, ``constant`` needs ``symbol``.  The classmethod
    constructors fill in the bookkeeping.
    """

    kind: str
    alphabet_size: int = 2
    p: float | None = None
    order: int | None = None
    transition_table: np.ndarray | None = None
    pattern: tuple[int, ...] | None = None
    symbol: int | None = None

    def __post_init__(self) -> None:
        A = self.alphabet_size
        if A < 2:
            raise ValueError(f"alphabet size must be at least 2, got {A}")
        if self.kind == "bernoulli":
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise ValueError(f"bernoulli requires p in [0, 1], got {self.p}")
            if A != 2:
                raise ValueError("bernoulli processes are binary (alphabet size 2)")
        elif self.kind == "markov":
            if self.order is None or self.order < 1:
                raise ValueError(f"markov order must be at least 1, got {self.order}")
            if A**self.order > _MAX_STATES:
                raise ValueError(
                    f"state space {A}**{self.order} exceeds the {_MAX_STATES} cap"
                )
            table = np.array(self.transition_table, dtype=np.float64, copy=True)
            if table.shape != (A**self.order, A):
                raise ValueError(
                    f"transition table must have shape ({A ** self.order}, {A}), "
                    f"got {table.shape}"
                )
            if (table < 0).any():
                raise ValueError("transition probabilities must be non-negative")
            sums = table.sum(axis=1)
            if np.abs(sums - 1.0).max() > _ROW_SUM_TOL:
                raise ValueError("transition rows must each sum to 1")
            table.flags.writeable = False
            object.__setattr__(self, "transition_table", table)
        elif self.kind == "periodic":
            if not self.pattern:
                raise ValueError("periodic pattern must be non-empty")
            pattern = tuple(int(s) for s in self.pattern)
            if any(not 0 <= s < A for s in pattern):
                raise ValueError(f"pattern symbols must lie in 0..{A - 1}")
            object.__setattr__(self, "pattern", pattern)
        elif self.kind == "constant":
            if self.symbol is None or not 0 <= self.symbol < A:
                raise ValueError(f"constant symbol must lie in 0..{A - 1}")
        else:
            raise ValueError(f"unknown process kind: {self.kind!r}")

    @classmethod
    def bernoulli(cls, p: float) -> "ProcessSpec":
        """I.i.d. binary draws with P(symbol 1) = p."""
        return cls(kind="bernoulli", alphabet_size=2, p=float(p))

    @classmethod
    def markov(cls, transition_table, alphabet_size: int = 2) -> "ProcessSpec":
        """Order-m chain; m is inferred from the table's row count."""
        table = np.asarray(transition_table, dtype=np.float64)
        if table.ndim != 2:
            raise ValueError("transition table must be two-dimensional")
        A = alphabet_size
        rows = table.shape[0]
        order = max(1, round(np.log(rows) / np.log(A))) if rows > 1 else 1
        if A**order != rows:
            raise ValueError(
                f"row count {rows} is not a power of the alphabet size {A}"
            )
        return cls(kind="markov", alphabet_size=A, order=order, transition_table=table)

    @classmethod
    def periodic(cls, pattern, alphabet_size: int | None = None) -> "ProcessSpec":
        """Deterministic tiling of a fixed symbol pattern."""
        pattern = tuple(int(s) for s in pattern)
        if alphabet_size is None:
            alphabet_size = max(2, max(pattern, default=0) + 1)
        return cls(kind="periodic", alphabet_size=alphabet_size, pattern=pattern)

    @classmethod
    def constant(cls, symbol: int = 0, alphabet_size: int = 2) -> "ProcessSpec":
        """A single symbol repeated forever."""
        return cls(kind="constant", alphabet_size=alphabet_size, symbol=int(symbol))


def symmetric_binary_markov(flip_probability: float) -> ProcessSpec:
    """Order-1 binary chain that flips its previous symbol with given odds.

    The stationary distribution is uniform by symmetry, so the entropy rate
    is exactly the binary entropy of the flip probability while the marginal
    symbol entropy stays at 1 bit.
    """
    eps = float(flip_probability)
    if not 0.0 <= eps <= 1.0:
        raise ValueError(f"flip probability must lie in [0, 1], got {eps}")
    return ProcessSpec.markov([[1.0 - eps, eps], [eps, 1.0 - eps]])


def generate(spec: ProcessSpec, n: int, seed: int) -> SymbolSequence:
    """Draw a length-n realization, deterministic in (spec, n, seed).

    Markov runs start from a composite state drawn from the stationary
    distribution, so the sample is stationary from its first symbol and
    needs no burn-in.  Randomness comes from numpy's ``default_rng``
    (PCG64) seeded with ``seed``.
    """
    if n < 1:
        raise ValueError(f"sequence length must be at least 1, got {n}")
    alphabet = Alphabet(spec.alphabet_size)
    if spec.kind == "constant":
        return SymbolSequence(alphabet, np.full(n, spec.symbol, dtype=np.int64))
    if spec.kind == "periodic":
        pattern = np.array(spec.pattern, dtype=np.int64)
        reps = -(-n // pattern.size)
        return SymbolSequence(alphabet, np.tile(pattern, reps)[:n])
    rng = np.random.default_rng(seed)
    if spec.kind == "bernoulli":
        return SymbolSequence(alphabet, (rng.random(n) < spec.p).astype(np.int64))
    if spec.kind == "markov":
        return SymbolSequence(alphabet, _sample_markov(spec, n, rng))
    raise ValueError(f"unknown process kind: {spec.kind!r}")


def _sample_markov(spec: ProcessSpec, n: int, rng: np.random.Generator) -> np.ndarray:
    A = spec.alphabet_size
    m = spec.order
    pi = stationary_distribution(spec.transition_table, A, m)
    cum_pi = np.cumsum(pi)
    state = min(int(np.searchsorted(cum_pi, rng.random(), side="right")), len(pi) - 1)
    symbols = [(state // A ** (m - 1 - i)) % A for i in range(m)]
    if n <= m:
        return np.array(symbols[:n], dtype=np.int64)
    cum_rows = np.cumsum(np.asarray(spec.transition_table), axis=1).tolist()
    draws = rng.random(n - m).tolist()
    keep = A ** (m - 1)
    last = A - 1
    append = symbols.append
    row = cum_rows[state]
    for u in draws:
        x = bisect_right(row, u)
        if x > last:
            x = last
        append(x)
        state = (state % keep) * A + x
        row = cum_rows[state]
    return np.array(symbols, dtype=np.int64)


def spec_entropy_rate(spec: ProcessSpec) -> float:
    """Exact entropy rate of the process; see :func:`analytic_entropy_rate`."""
    return analytic_entropy_rate(spec)
