"""Packing sequences S = (s_1, s_2, ...).

A sequence is a finite non-decreasing prefix followed by an optional
infinite tail: either a constant run ``t^inf`` or the identity rule
``s_i = i`` (which gives the ordinary packing chromatic number).

Text grammar, used verbatim on the command line::

    item (',' item)*      item = INT | INT '^' INT | INT '^inf' | 'id'

``INT^inf`` and ``id`` may only appear as the last item.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from .errors import IndexOutOfRange, NotNonDecreasing, ParseError


@dataclass(frozen=True)
class Constant:
    """Infinite tail repeating ``value`` forever."""

    value: int


@dataclass(frozen=True)
class Identity:
    """Infinite tail with s_i = i."""


Tail = Optional[Union[Constant, Identity]]


@dataclass(frozen=True)
class PackingSequence:
    prefix: tuple[int, ...]
    tail: Tail = None

    def __post_init__(self):
        prefix = tuple(int(x) for x in self.prefix)
        if any(x < 1 for x in prefix):
            raise NotNonDecreasing(f"terms must be positive: {prefix}")
        for a, b in zip(prefix, prefix[1:]):
            if b < a:
                raise NotNonDecreasing(f"sequence decreases ({a} then {b})")
        tail = self.tail
        if isinstance(tail, Constant):
            if tail.value < 1:
                raise NotNonDecreasing(f"terms must be positive: {tail.value}")
            if prefix and tail.value < prefix[-1]:
                raise NotNonDecreasing(
                    f"tail {tail.value} is below last prefix term {prefix[-1]}")
            # t^inf swallows trailing copies of t so equal sequences compare equal
            while prefix and prefix[-1] == tail.value:
                prefix = prefix[:-1]
        elif isinstance(tail, Identity):
            if prefix and prefix[-1] > len(prefix) + 1:
                raise NotNonDecreasing(
                    f"identity tail starts at {len(prefix) + 1}, "
                    f"below last prefix term {prefix[-1]}")
            while prefix and prefix[-1] == len(prefix):
                prefix = prefix[:-1]
        elif tail is not None:
            raise TypeError(f"unsupported tail {tail!r}")
        object.__setattr__(self, "prefix", prefix)

    @property
    def is_finite(self) -> bool:
        return self.tail is None

    @property
    def length(self) -> Optional[int]:
        """Number of terms, or None for an infinite sequence."""
        return len(self.prefix) if self.tail is None else None

    @property
    def is_all_ones(self) -> bool:
        return isinstance(self.tail, Constant) and self.tail.value == 1

    def has_term(self, i: int) -> bool:
        return i >= 1 and (self.tail is not None or i <= len(self.prefix))

    def __getitem__(self, i: int) -> int:
        return term(self, i)

    def ones_prefix_length(self) -> int:
        """Number of leading terms equal to 1 (the ``l`` in ``(1^l, ...)``).

        Raises ValueError for the all-ones sequence, where it is unbounded.
        """
        if self.is_all_ones:
            raise ValueError("all-ones sequence has no bounded ones prefix")
        count = 0
        while self.has_term(count + 1) and term(self, count + 1) == 1:
            count += 1
        return count

    def first_index_at_least(self, bound: int) -> Optional[int]:
        """Least i with s_i >= bound, or None if no term reaches it."""
        for i, s in enumerate(self.prefix, start=1):
            if s >= bound:
                return i
        m = len(self.prefix)
        if isinstance(self.tail, Constant):
            return m + 1 if self.tail.value >= bound else None
        if isinstance(self.tail, Identity):
            return max(m + 1, bound)
        return None

    def __str__(self) -> str:
        return format_sequence(self)


def term(S: PackingSequence, i: int) -> int:
    """Return s_i (1-based)."""
    if i < 1:
        raise IndexOutOfRange(f"sequence index must be >= 1, got {i}")
    m = len(S.prefix)
    if i <= m:
        return S.prefix[i - 1]
    if isinstance(S.tail, Constant):
        return S.tail.value
    if isinstance(S.tail, Identity):
        return i
    raise IndexOutOfRange(f"finite sequence has {m} terms, asked for s_{i}")


def truncate(S: PackingSequence, k: int) -> tuple[int, ...]:
    """First k terms (s_1, ..., s_k)."""
    if k < 0:
        raise IndexOutOfRange(f"k must be nonnegative, got {k}")
    if S.tail is None and k > len(S.prefix):
        raise IndexOutOfRange(
            f"finite sequence has {len(S.prefix)} terms, asked for {k}")
    return tuple(term(S, i) for i in range(1, k + 1))


_ITEM = re.compile(r"^(\d+)(?:\^(\d+|inf))?$")


def parse_sequence(text: str) -> PackingSequence:
    items = [p.strip() for p in text.strip().split(",")]
    if not items or any(not p for p in items):
        raise ParseError(f"empty item in sequence {text!r}")
    prefix: list[int] = []
    tail: Tail = None
    for pos, item in enumerate(items):
        if tail is not None:
            raise ParseError(f"nothing may follow an infinite tail: {text!r}")
        if item == "id":
            tail = Identity()
            continue
        m = _ITEM.match(item)
        if m is None:
            raise ParseError(f"bad sequence item {item!r}")
        value = int(m.group(1))
        exp = m.group(2)
        if exp is None:
            prefix.append(value)
        elif exp == "inf":
            tail = Constant(value)
        else:
            reps = int(exp)
            if reps < 1:
                raise ParseError(f"repeat count must be >= 1 in {item!r}")
            prefix.extend([value] * reps)
    if not prefix and tail is None:
        raise ParseError(f"empty sequence {text!r}")
    return PackingSequence(tuple(prefix), tail)


def format_sequence(S: PackingSequence) -> str:
    """Canonical text form; ``parse_sequence(format_sequence(S)) == S``."""
    parts = []
    i = 0
    p = S.prefix
    while i < len(p):
        j = i
        while j < len(p) and p[j] == p[i]:
            j += 1
        run = j - i
        parts.append(str(p[i]) if run == 1 else f"{p[i]}^{run}")
        i = j
    if isinstance(S.tail, Constant):
        parts.append(f"{S.tail.value}^inf")
    elif isinstance(S.tail, Identity):
        parts.append("id")
    return ",".join(parts)


def all_ones(k: Optional[int] = None) -> PackingSequence:
    """(1^k), or (1^inf) when k is None."""
    if k is None:
        return PackingSequence((), Constant(1))
    return PackingSequence((1,) * k)
