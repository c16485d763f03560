"""Symbol sequences over explicit alphabets, and digitizers for numeric series.

A :class:`SymbolSequence` is the object every complexity metric consumes.
Numeric recordings enter through :class:`NumericSeries` and are mapped onto a
finite alphabet by one of the digitizers below.  Thresholding at the median
maximizes the empirical symbol entropy of a binary output; quantile cut
points generalize the same idea to larger alphabets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Alphabet",
    "SymbolSequence",
    "NumericSeries",
    "binarize_median",
    "digitize_quantiles",
    "shuffle",
]


@dataclass(frozen=True)
class Alphabet:
    """Finite alphabet; symbols are canonically the integers 0..size-1."""

    size: int

    def __post_init__(self) -> None:
        if int(self.size) != self.size or self.size < 2:
            raise ValueError(f"alphabet size must be an integer >= 2, got {self.size}")
        object.__setattr__(self, "size", int(self.size))


@dataclass(frozen=True, eq=False)
class SymbolSequence:
    """Immutable run of symbol indices drawn from a fixed alphabet."""

    alphabet: Alphabet
    data: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.data, dtype=np.int64, copy=True)
        if arr.ndim != 1:
            raise ValueError("symbol data must be one-dimensional")
        if arr.size == 0:
            raise ValueError("symbol sequence must contain at least one symbol")
        if int(arr.min()) < 0 or int(arr.max()) >= self.alphabet.size:
            raise ValueError(
                f"symbols must lie in 0..{self.alphabet.size - 1} "
                f"for an alphabet of size {self.alphabet.size}"
            )
        arr.flags.writeable = False
        object.__setattr__(self, "data", arr)

    def __len__(self) -> int:
        return int(self.data.size)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymbolSequence):
            return NotImplemented
        return self.alphabet == other.alphabet and np.array_equal(self.data, other.data)

    def __repr__(self) -> str:
        head = ",".join(str(s) for s in self.data[:16])
        tail = ",..." if len(self) > 16 else ""
        return f"SymbolSequence(A={self.alphabet.size}, n={len(self)}, [{head}{tail}])"


@dataclass(frozen=True, eq=False)
class NumericSeries:
    """Real-valued samples awaiting digitization.

    NaN samples are rejected outright: silently dropping them would change
    the sequence length and break comparability across recordings.
    """

    samples: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.samples, dtype=np.float64, copy=True)
        if arr.ndim != 1:
            raise ValueError("samples must be one-dimensional")
        if arr.size == 0:
            raise ValueError("numeric series contains no samples")
        if np.isnan(arr).any():
            raise ValueError("numeric series contains NaN samples")
        arr.flags.writeable = False
        object.__setattr__(self, "samples", arr)

    def __len__(self) -> int:
        return int(self.samples.size)


def binarize_median(series: NumericSeries) -> SymbolSequence:
    """Binarize a numeric series at its median.

    Samples strictly above the median map to 1, everything else (including
    exact ties) to 0.  The median is the midpoint of the sorted samples
    (mean of the two central order statistics for even lengths), so an even
    number of distinct samples splits exactly 50/50 and the output attains
    the maximal empirical symbol entropy of 1 bit.
    """
    med = float(np.median(series.samples))
    return SymbolSequence(Alphabet(2), (series.samples > med).astype(np.int64))


def digitize_quantiles(series: NumericSeries, levels: int) -> SymbolSequence:
    """Discretize a numeric series into ``levels`` near-equally-populated bins.

    Cut points are the k/levels empirical quantiles for k = 1..levels-1
    (linear interpolation between order statistics).  A sample's symbol is
    the number of cut points strictly below it, i.e. bin k covers the
    half-open interval (q_k, q_{k+1}] and the lowest bin is closed below.
    ``levels=2`` reproduces :func:`binarize_median`.
    """
    if levels < 2:
        raise ValueError(f"levels must be at least 2, got {levels}")
    cuts = np.quantile(series.samples, np.arange(1, levels) / levels)
    symbols = np.searchsorted(cuts, series.samples, side="left")
    return SymbolSequence(Alphabet(levels), symbols.astype(np.int64))


def shuffle(seq: SymbolSequence, seed: int) -> SymbolSequence:
    """Uniformly permute a sequence with a seed-determined generator.

    numpy's ``default_rng`` (PCG64 bit generator) drives a Fisher-Yates
    permutation of the index range 0..n-1, so identical (seq, seed) pairs
    give identical output on every run and platform.  Length and symbol
    multiset are exactly preserved.
    """
    rng = np.random.default_rng(seed)
    perm = rng.permutation(len(seq))
    return SymbolSequence(seq.alphabet, seq.data[perm])
