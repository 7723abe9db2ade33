"""String types over finite alphabets and the intersection match relation.

Two positions match when their symbol sets share a letter.  The relation is
reflexive and symmetric but not transitive (b matches {b,c}, {b,c} matches c,
b does not match c), which is exactly what separates indeterminate strings
from regular ones.
"""

from __future__ import annotations

from dataclasses import dataclass

LETTERS = frozenset(
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
)


class ParseError(ValueError):
    """Input text does not conform to the string grammar."""


@dataclass(frozen=True)
class RegularString:
    """A sequence of single letters with its inferred alphabet (sorted)."""

    letters: str
    alphabet: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters

    def ids(self) -> list[int]:
        """Letters as indexes into the sorted per-string alphabet."""
        index = {c: k for k, c in enumerate(self.alphabet)}
        return [index[c] for c in self.letters]

    def to_indeterminate(self) -> IndeterminateString:
        return IndeterminateString(
            tuple(frozenset((c,)) for c in self.letters), self.alphabet
        )


@dataclass(frozen=True)
class IndeterminateString:
    """A sequence of nonempty letter sets with its inferred alphabet (sorted)."""

    positions: tuple[frozenset[str], ...]
    alphabet: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.positions)

    def __str__(self) -> str:
        out = []
        for pos in self.positions:
            if len(pos) == 1:
                out.append(next(iter(pos)))
            else:
                out.append("[" + "".join(sorted(pos)) + "]")
        return "".join(out)

    def masks(self) -> list[int]:
        """Positions as bitmasks over the sorted per-string alphabet."""
        bit = {c: 1 << k for k, c in enumerate(self.alphabet)}
        return [sum(bit[c] for c in pos) for pos in self.positions]

    def is_regular(self) -> bool:
        return all(len(pos) == 1 for pos in self.positions)


def parse_regular(text: str) -> RegularString:
    """Parse plain letter text into a RegularString.

    Only [a-zA-Z0-9] are accepted; set syntax is rejected here.
    """
    if not text:
        raise ParseError("empty input")
    for k, c in enumerate(text):
        if c not in LETTERS:
            raise ParseError(f"invalid character {c!r} at position {k + 1}")
    return RegularString(text, tuple(sorted(set(text))))


def parse_indeterminate(text: str) -> IndeterminateString:
    """Parse indeterminate text: a position is a letter or a [letters] set.

    Duplicate letters inside a set and empty sets are rejected.
    """
    if not text:
        raise ParseError("empty input")
    positions: list[frozenset[str]] = []
    k = 0
    n = len(text)
    while k < n:
        c = text[k]
        if c == "[":
            close = text.find("]", k + 1)
            if close < 0:
                raise ParseError(f"unclosed '[' at position {len(positions) + 1}")
            members = text[k + 1 : close]
            if not members:
                raise ParseError(f"empty set at position {len(positions) + 1}")
            seen: set[str] = set()
            for m in members:
                if m not in LETTERS:
                    raise ParseError(
                        f"invalid character {m!r} at position {len(positions) + 1}"
                    )
                if m in seen:
                    raise ParseError(
                        f"duplicate letter {m!r} at position {len(positions) + 1}"
                    )
                seen.add(m)
            positions.append(frozenset(members))
            k = close + 1
        elif c == "]":
            raise ParseError(f"unmatched ']' at position {len(positions) + 1}")
        elif c in LETTERS:
            positions.append(frozenset((c,)))
            k += 1
        else:
            raise ParseError(f"invalid character {c!r} at position {len(positions) + 1}")
    alphabet = tuple(sorted(set().union(*positions)))
    return IndeterminateString(tuple(positions), alphabet)


def symbols_match(a: frozenset[str], b: frozenset[str]) -> bool:
    """True when the two symbol sets intersect."""
    return not a.isdisjoint(b)


def _positions(x: IndeterminateString | RegularString) -> tuple[frozenset[str], ...]:
    if isinstance(x, RegularString):
        return x.to_indeterminate().positions
    return x.positions


def strings_match(
    x: IndeterminateString | RegularString, y: IndeterminateString | RegularString
) -> bool:
    """True when both strings have equal length and match positionwise."""
    xs, ys = _positions(x), _positions(y)
    if len(xs) != len(ys):
        return False
    return all(not a.isdisjoint(b) for a, b in zip(xs, ys))
