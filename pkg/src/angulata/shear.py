"""Shear coordinates of arcs and laminations relative to a tilting object.

The shear vector of an arc ``A`` is the index of ``O_{A^-}`` (zero when the
rounded-down arc is not admissible). At a mutable summand it can also be
read off locally from which intervals of the exchange frame ``A`` meets;
:func:`shear_vector` checks the two against each other.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Iterator

from .errors import InvariantViolation
from .index import IndexVector, compute_index
from .model import ZERO, Arc, ModelParams, lamination, round_down
from .tilting import ClusterTilting, ExchangeFrame, mutable_positions, mutate


@lru_cache(maxsize=65536)
def _frame(t: ClusterTilting, pos: int) -> ExchangeFrame:
    return mutate(t, pos)[1]


def _in_cyclic(x: Fraction, lo: int, hi: int) -> bool:
    # open interval from lo to hi going up, wrapping past m if lo >= hi
    if lo < hi:
        return lo < x < hi
    return x > lo or x < hi


def local_shear(t: ClusterTilting, pos: int, a: Arc) -> int:
    """Shear coordinate of ``a`` at the mutable summand in slot ``pos``.

    ``-1`` if ``a`` meets every frame interval just below an element of the
    outgoing summand, ``+1`` if it meets every interval just above one,
    ``0`` otherwise.
    """
    frame = _frame(t, pos)
    b = frame.b
    k = len(b)
    below = above = True
    for i in frame.r_positions:
        r, lo, hi = b[i], b[(i - 1) % k], b[(i + 1) % k]
        if below and not any(_in_cyclic(x, lo, r) for x in a):
            below = False
        if above and not any(_in_cyclic(x, r, hi) for x in a):
            above = False
    if below and above:
        raise InvariantViolation(f"arc meets both sides of {b} at slot {pos}")
    return -1 if below else 1 if above else 0


def shear_vector(t: ClusterTilting, a: Arc, check: bool = True) -> IndexVector:
    """Shear coordinates of ``a``: the index of its rounded-down object.

    With ``check`` the local rule is evaluated at every mutable slot and
    any disagreement raises :class:`InvariantViolation`.
    """
    lower = round_down(a, t.params)
    if lower is ZERO:
        v = IndexVector.zero(t.summands)
    else:
        v = compute_index(t, lower)
    if check:
        for pos in mutable_positions(t):
            local = local_shear(t, pos, a)
            if local != v[pos]:
                raise InvariantViolation(
                    f"shear of {a} at slot {pos} of {t}: local rule {local}, index {v[pos]}"
                )
    return v


def shear_lamination(t: ClusterTilting, arcs: Iterable[Arc], check: bool = True) -> IndexVector:
    """Sum of the shear vectors of pairwise non-intertwining arcs."""
    total = IndexVector.zero(t.summands)
    for a in lamination(arcs):
        total = total + shear_vector(t, a, check=check)
    return total


def mesh_arcs(p: ModelParams) -> Iterator[Arc]:
    """One arc for every multiset of ``d+1`` unit intervals ``(k, k+1)``.

    An interval chosen ``c`` times receives the points ``k + i/(c+1)``.
    Both the local rule and the rounded-down object depend only on this
    multiset, so the mesh covers every case.
    """
    for ks in combinations_with_replacement(range(p.m), p.d + 1):
        pts = []
        for k in sorted(set(ks)):
            c = ks.count(k)
            pts.extend(k + Fraction(i, c + 1) for i in range(1, c + 1))
        yield tuple(pts)
