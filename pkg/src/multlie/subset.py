"""Bitmask subsets of a carrier ``0..n-1``."""
from __future__ import annotations

from typing import Iterable, Iterator

MAX_ORDER = 64


class Subset:
    """An immutable set of element indices stored as an integer bitmask."""

    __slots__ = ("bits", "order")

    def __init__(self, bits: int, order: int):
        if order > MAX_ORDER:
            from .errors import OrderTooLarge

            raise OrderTooLarge(f"subsets are capped at order {MAX_ORDER}, got {order}")
        if bits < 0 or bits >> order:
            raise ValueError("bits outside carrier")
        self.bits = bits
        self.order = order

    @classmethod
    def of(cls, order: int, elements: Iterable[int]) -> "Subset":
        bits = 0
        for e in elements:
            if not 0 <= e < order:
                raise ValueError(f"element {e} outside carrier of order {order}")
            bits |= 1 << e
        return cls(bits, order)

    @classmethod
    def full(cls, order: int) -> "Subset":
        return cls((1 << order) - 1, order)

    @classmethod
    def empty(cls, order: int) -> "Subset":
        return cls(0, order)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def elements(self) -> tuple[int, ...]:
        return tuple(self)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> x & 1)

    def _same(self, other: "Subset") -> None:
        if self.order != other.order:
            raise ValueError("subsets of different carriers")

    def __or__(self, other: "Subset") -> "Subset":
        self._same(other)
        return Subset(self.bits | other.bits, self.order)

    def __and__(self, other: "Subset") -> "Subset":
        self._same(other)
        return Subset(self.bits & other.bits, self.order)

    def __sub__(self, other: "Subset") -> "Subset":
        self._same(other)
        return Subset(self.bits & ~other.bits, self.order)

    def __le__(self, other: "Subset") -> bool:
        self._same(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "Subset") -> bool:
        return self <= other and self.bits != other.bits

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subset):
            return NotImplemented
        return self.bits == other.bits and self.order == other.order

    def __hash__(self) -> int:
        return hash((self.bits, self.order))

    def __repr__(self) -> str:
        return f"Subset({list(self)}, order={self.order})"
