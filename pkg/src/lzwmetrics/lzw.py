"""LZW parser: dictionary code stream, phrase count, and description length.

The encoder follows the classic greedy loop: start from a dictionary holding
all single-symbol strings, repeatedly emit the index of the longest
dictionary string matching at the cursor, consume it, and register that
match extended by the following input symbol as a new entry.  The number of
emitted codes c(n) and the bit cost of transmitting them are the raw
complexity measures everything downstream normalizes.

The dictionary is unbounded and never reset; this module prices the parse
rather than producing a packed bitstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .sequence import Alphabet, SymbolSequence

__all__ = [
    "LzwResult",
    "CorruptStreamError",
    "encode",
    "decode",
    "description_length",
    "description_length_bound",
]


class CorruptStreamError(ValueError):
    """A code stream refers to a dictionary index that cannot exist yet."""


@dataclass(frozen=True)
class LzwResult:
    """Outcome of one LZW parse.

    ``codes`` are the emitted dictionary indices in order; ``phrase_count``
    is their number, c(n).  ``dict_size`` counts dictionary entries at
    termination: the alphabet's single symbols plus one insertion per
    emission except the final one.  ``description_length_bits`` prices the
    code stream (see :func:`description_length`); ``bound_bits`` is the
    coarser phrase-count bound (see :func:`description_length_bound`).
    """

    codes: tuple[int, ...]
    phrase_count: int
    dict_size: int
    description_length_bits: float
    bound_bits: float


def encode(seq: SymbolSequence) -> LzwResult:
    """Parse a sequence with LZW and price its code stream.

    The dictionary starts as the A single-symbol strings at indices 0..A-1
    and grows by one entry per emitted phrase (while input remains).  Lookup
    is a flat hash keyed on (matched-prefix index, next symbol), so every
    input symbol costs O(1) and a full parse is linear in n; sequences of
    10^7 symbols parse in seconds.
    """
    A = seq.alphabet.size
    data = seq.data.tolist()
    table: dict[int, int] = {}
    codes: list[int] = []
    append = codes.append
    get = table.get
    next_code = A
    it = iter(data)
    current = next(it)
    for s in it:
        key = current * A + s
        found = get(key)
        if found is not None:
            current = found
        else:
            append(current)
            table[key] = next_code
            next_code += 1
            current = s
    append(current)
    return LzwResult(
        codes=tuple(codes),
        phrase_count=len(codes),
        dict_size=next_code,
        description_length_bits=_code_stream_bits(codes),
        bound_bits=description_length_bound(len(codes), A),
    )


def _code_stream_bits(codes: Sequence[int]) -> float:
    # M clamps at 2 so both logarithms stay defined when every emitted code
    # is 0 or 1 (single-phrase and tiny parses).
    m = max(2, max(codes))
    log_m = math.log2(m)
    return math.log2(log_m) + len(codes) * log_m


def description_length(result: LzwResult) -> float:
    """Bits needed to transmit the emitted code stream.

    Every code fits in log2(M) bits with M the largest emitted value
    (clamped at 2), and log2(log2(M)) more bits announce that width:

        log2(log2(M)) + c(n) * log2(M)

    This is the value stored in ``description_length_bits`` by
    :func:`encode` and the quantity the rho metrics normalize.
    """
    return _code_stream_bits(result.codes)


def description_length_bound(c: int, A: int) -> float:
    """Phrase-count bound on the description length: c * log2(c + log2 A)."""
    if c < 1:
        raise ValueError(f"phrase count must be at least 1, got {c}")
    if A < 2:
        raise ValueError(f"alphabet size must be at least 2, got {A}")
    return c * math.log2(c + math.log2(A))


def decode(codes: Iterable[int], alphabet: Alphabet) -> SymbolSequence:
    """Invert :func:`encode`: rebuild the symbol sequence from its codes.

    The decoder mirrors the encoder's dictionary growth one step behind,
    which suffices because a code may precede its own definition only in
    the standard self-referential case (code equal to the next free index),
    where the entry is the previous phrase extended by its own first
    symbol.  Any other forward reference raises :class:`CorruptStreamError`.
    """
    codes = [int(c) for c in codes]
    if not codes:
        raise ValueError("empty code stream")
    A = alphabet.size
    entries: list[tuple[int, ...]] = [(s,) for s in range(A)]
    first = codes[0]
    if not 0 <= first < A:
        raise CorruptStreamError(
            f"initial code {first} is not a single-symbol index (A={A})"
        )
    prev = entries[first]
    out: list[int] = list(prev)
    for code in codes[1:]:
        if 0 <= code < len(entries):
            entry = entries[code]
        elif code == len(entries):
            entry = prev + (prev[0],)
        else:
            raise CorruptStreamError(
                f"code {code} not yet defined (dictionary size {len(entries)})"
            )
        entries.append(prev + (entry[0],))
        out.extend(entry)
        prev = entry
    return SymbolSequence(alphabet, np.array(out, dtype=np.int64))
