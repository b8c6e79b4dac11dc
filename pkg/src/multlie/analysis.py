"""Isomorphism search and nilpotency / solvability of the star operation."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .algebra import (MultLieAlg, ideal_generated, lie_center, mult_lie_center,
                      star_closure, star_values)
from .group import Morphism, center, commutator_subgroup
from .search import refine_colors, search_maps
from .subset import Subset


@dataclass(frozen=True, order=True)
class Fingerprint:
    order: int
    element_orders: tuple
    center: int
    lie_center: int
    mult_lie_center: int
    star_closure: int
    commutator: int
    star_value_orders: tuple
    nilpotency_class: int  # -1 when above the default cap

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "element_orders": [list(p) for p in self.element_orders],
            "center": self.center,
            "lie_center": self.lie_center,
            "mult_lie_center": self.mult_lie_center,
            "star_closure": self.star_closure,
            "commutator": self.commutator,
            "star_value_orders": [list(p) for p in self.star_value_orders],
            "nilpotency_class": self.nilpotency_class,
        }


def fingerprint(M: MultLieAlg) -> Fingerprint:
    G = M.group
    eo = G.element_orders
    values = Counter(eo[v] for row in M.s for v in row)
    nil = star_nilpotency_class(M)
    return Fingerprint(
        order=M.order,
        element_orders=tuple(sorted(Counter(eo).items())),
        center=len(center(G)),
        lie_center=len(lie_center(M)),
        mult_lie_center=len(mult_lie_center(M)),
        star_closure=len(star_closure(M)),
        commutator=len(commutator_subgroup(G)),
        star_value_orders=tuple(sorted(values.items())),
        nilpotency_class=-1 if nil is None else nil,
    )


def find_isomorphism(M1: MultLieAlg, M2: MultLieAlg) -> Optional[Morphism]:
    """An isomorphism of algebras ``M1 -> M2``, or None when none exists.

    The search is exhaustive, so None is a proof of non-isomorphism.
    """
    if M1.order != M2.order or fingerprint(M1) != fingerprint(M2):
        return None
    colors = refine_colors([M1, M2])
    found = search_maps(M1, M2, colors=colors)
    if not found:
        return None
    return Morphism.build(M1, M2, found[0])


def is_isomorphic(M1: MultLieAlg, M2: MultLieAlg) -> bool:
    return find_isomorphism(M1, M2) is not None


def left_normed_values(M: MultLieAlg, length: int) -> set[int]:
    """All values of ``(((x1 * x2) * x3) * ... * xk)`` for ``k = length``."""
    vals = set(range(M.order))
    everything = range(M.order)
    for _ in range(length - 1):
        vals = star_values(M, vals, everything)
    return vals


def star_nilpotency_class(M: MultLieAlg, cap: Optional[int] = None) -> Optional[int]:
    """Least ``n`` with every left-normed product of length ``n + 1`` trivial.

    Works on the sets of reachable values per length. Returns None when no
    ``n <= cap`` works (cap defaults to the order).
    """
    cap = M.order if cap is None else cap
    e = M.identity
    vals = set(range(M.order))
    if vals == {e}:
        return 0
    everything = range(M.order)
    for n in range(1, cap + 1):
        nxt = star_values(M, vals, everything)
        if nxt == {e}:
            return n
        if nxt == vals:
            return None
        vals = nxt
    return None


def star_derived_series(M: MultLieAlg, cap: Optional[int] = None) -> list[Subset]:
    """``D0 = M``, ``D(i+1)`` = ideal generated by ``Di * Di``; stops at ``{1}``,
    a repeat, or after ``cap`` steps."""
    cap = M.order if cap is None else cap
    D = M.group.full()
    series = [D]
    for _ in range(cap):
        if len(D) == 1:
            break
        els = D.elements()
        nxt = ideal_generated(M, sorted(star_values(M, els, els)))
        series.append(nxt)
        if nxt == D:
            break
        D = nxt
    return series


def star_solvable(M: MultLieAlg, cap: Optional[int] = None) -> Optional[int]:
    """Least ``i`` with ``Di = {1}``, or None if the series stalls or exceeds cap."""
    series = star_derived_series(M, cap)
    if len(series[-1]) == 1:
        return len(series) - 1
    return None
