"""Exact algebra of cyclic turn words in the matrices L and R.

A non-backtracking closed walk on the trivalent dual graph of a
zero-shear surface turns left or right at each vertex.  Reading the
turns gives a cyclic word in

    L = [[1, 1], [0, 1]]      R = [[1, 0], [1, 1]]

whose integer matrix trace determines the geodesic length of the free
homotopy class:  length = 2 * arccosh(trace / 2).  Words that are a
power of a single letter have trace 2 and correspond to loops around a
cusp (no geodesic representative).

All arithmetic is exact: traces are Python integers and cannot
overflow.  The compiled walk kernel uses checked 64-bit arithmetic and
falls back to this module on (never yet observed) overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PeripheralWordError

__all__ = [
    "TurnWord",
    "canonical",
    "geodesic_length",
    "matrix",
    "trace",
]

_ALPHABET = frozenset("LR")
_SWAP = str.maketrans("LR", "RL")


@dataclass(frozen=True)
class TurnWord:
    """A nonempty cyclic word over the alphabet {L, R}.

    Construct from a plain letter string or via :meth:`parse`, which
    also accepts exponent shorthand such as ``"RL4RL4"``.
    """

    letters: str

    def __post_init__(self):
        if not self.letters:
            raise ValueError("turn word must be nonempty")
        if not set(self.letters) <= _ALPHABET:
            raise ValueError(f"turn word may only contain L and R: {self.letters!r}")

    @classmethod
    def parse(cls, text: str) -> "TurnWord":
        """Parse ``"RL4RL4"``-style shorthand (digits repeat the previous letter)."""
        out: list[str] = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch in _ALPHABET:
                out.append(ch)
                i += 1
            elif ch.isdigit():
                if not out:
                    raise ValueError(f"exponent before any letter in {text!r}")
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                exp = int(text[i:j])
                if exp < 1:
                    raise ValueError(f"exponent must be >= 1 in {text!r}")
                out.append(out[-1] * (exp - 1))
                i = j
            else:
                raise ValueError(f"unexpected character {ch!r} in turn word {text!r}")
        return cls("".join(out))

    def __str__(self):
        """Compact exponent form, e.g. ``L4RL4R``."""
        out = []
        i = 0
        s = self.letters
        while i < len(s):
            j = i
            while j < len(s) and s[j] == s[i]:
                j += 1
            out.append(s[i] if j - i == 1 else f"{s[i]}{j - i}")
            i = j
        return "".join(out)

    def __len__(self):
        return len(self.letters)

    @property
    def is_peripheral(self) -> bool:
        """True iff the cyclic word is a power of a single letter (trace 2)."""
        return len(set(self.letters)) == 1


def _as_letters(w) -> str:
    if isinstance(w, TurnWord):
        return w.letters
    if isinstance(w, str):
        return TurnWord.parse(w).letters
    raise TypeError(f"expected TurnWord or string, got {type(w).__name__}")


def matrix(w) -> tuple[int, int, int, int]:
    """The product matrix (a, b, c, d) of the word, exactly.

    Right-multiplication updates: M*L adds column 1 to column 2, M*R the
    reverse, so all entries stay non-negative and non-decreasing.
    """
    a, b, c, d = 1, 0, 0, 1
    for ch in _as_letters(w):
        if ch == "L":
            b += a
            d += c
        else:
            a += b
            c += d
    return a, b, c, d


def trace(w) -> int:
    """Exact integer trace of the word's matrix.

    Invariant under cyclic rotation and under reversal-with-letter-swap;
    equals 2 exactly for the single-letter powers.
    """
    m = matrix(w)
    return m[0] + m[3]


def geodesic_length(w) -> float:
    """Geodesic length 2 * arccosh(trace/2) of a hyperbolic word.

    Raises :class:`PeripheralWordError` when the trace is 2 (cusp loop).
    """
    t = trace(w)
    if t == 2:
        raise PeripheralWordError(
            f"{TurnWord(_as_letters(w))} is a cusp loop (trace 2); no geodesic length"
        )
    return 2.0 * math.acosh(t / 2.0)


def reverse_swap(w) -> TurnWord:
    """The word of the reversed walk: reverse the letters and swap L with R."""
    return TurnWord(_as_letters(w)[::-1].translate(_SWAP))


def canonical(w) -> TurnWord:
    """Canonical form: lexicographically least rotation of the word or of
    its reverse-swap, identifying a class with its orientation reversal.

    Idempotent, and constant on the rotation/reversal orbit.
    """
    s = _as_letters(w)
    t = s[::-1].translate(_SWAP)
    best = min(
        min(s[i:] + s[:i] for i in range(len(s))),
        min(t[i:] + t[:i] for i in range(len(t))),
    )
    return TurnWord(best)
