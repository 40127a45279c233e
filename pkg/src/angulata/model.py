"""Objects of the higher cluster category and arcs on the vertex circle.

An indecomposable object is labelled by a sorted ``(d+1)``-tuple of vertices
in ``Z/m`` (``m = n + 2d + 1``) with no two cyclically consecutive entries.
Tuples are plain Python tuples of ints so they hash, sort and compare
lexicographically for free. Arcs are tuples of :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence, Tuple, Union

from .errors import ValidationError

IndexTuple = Tuple[int, ...]
Arc = Tuple[Fraction, ...]


@dataclass(frozen=True, order=True)
class ModelParams:
    """Dimension ``d`` and rank parameter ``n``; vertices are ``0..m-1``."""

    d: int
    n: int

    def __post_init__(self):
        if not isinstance(self.d, int) or not isinstance(self.n, int):
            raise ValidationError("d and n must be integers")
        if self.d < 1 or self.n < 1:
            raise ValidationError(f"need d >= 1 and n >= 1, got d={self.d}, n={self.n}")

    @property
    def m(self) -> int:
        return self.n + 2 * self.d + 1

    @property
    def vertex_count(self) -> int:
        return self.m

    @property
    def vertices(self) -> range:
        return range(self.m)

    @property
    def odd(self) -> bool:
        return self.d % 2 == 1


class ZeroObject:
    """The zero object, returned when a rounded arc is not admissible."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"

    def __bool__(self) -> bool:
        return False

    def __reduce__(self):
        return (ZeroObject, ())


ZERO = ZeroObject()


def _check_shape(entries: Sequence[int], p: ModelParams) -> None:
    if len(entries) != p.d + 1:
        raise ValidationError(f"expected {p.d + 1} entries, got {len(entries)}: {tuple(entries)}")
    for e in entries:
        if isinstance(e, bool) or not isinstance(e, int):
            raise ValidationError(f"entries must be integers: {tuple(entries)}")
        if not 0 <= e < p.m:
            raise ValidationError(f"entry {e} outside 0..{p.m - 1}")
    if any(a >= b for a, b in zip(entries, entries[1:])):
        raise ValidationError(f"entries must be strictly increasing: {tuple(entries)}")


def is_admissible(entries: Sequence[int], p: ModelParams) -> bool:
    """True iff no element's cyclic successor also lies in ``entries``.

    Raises :class:`ValidationError` on wrong length, out-of-range values,
    or unsorted/duplicate entries.
    """
    _check_shape(entries, p)
    s = set(entries)
    return all((i + 1) % p.m not in s for i in entries)


def index_tuple(entries: Iterable[int], p: ModelParams) -> IndexTuple:
    """Sort, validate and return an admissible tuple."""
    t = tuple(sorted(entries))
    if not is_admissible(t, p):
        raise ValidationError(f"{t} has cyclically consecutive entries (m={p.m})")
    return t


@lru_cache(maxsize=None)
def enumerate_objects(p: ModelParams) -> tuple[IndexTuple, ...]:
    """All admissible tuples in lexicographic order."""
    m = p.m
    out = []
    for c in combinations(range(m), p.d + 1):
        s = set(c)
        if all((i + 1) % m not in s for i in c):
            out.append(c)
    return tuple(out)


def intertwines(a: Sequence, b: Sequence) -> bool:
    """Strict alternation test for two increasing tuples of equal length.

    Works for integer tuples and for rational arcs alike. A shared value
    rules out alternation.
    """
    if len(a) != len(b):
        return False
    k = len(a)
    if k == 0:
        return False
    if a[0] < b[0]:
        first, second = a, b
    elif b[0] < a[0]:
        first, second = b, a
    else:
        return False
    for i in range(k):
        if not first[i] < second[i]:
            return False
        if i + 1 < k and not second[i] < first[i + 1]:
            return False
    return True


intertwines_arcs = intertwines


def hom_to_suspension_dim(i: IndexTuple, j: IndexTuple) -> int:
    """Dimension (0 or 1) of the extension space between two objects."""
    return 1 if intertwines(i, j) else 0


def suspend(i: IndexTuple, p: ModelParams, k: int = 1) -> IndexTuple:
    """Apply the suspension ``k`` times (negative ``k`` desuspends).

    The suspension subtracts 1 from every vertex modulo ``m``.
    """
    return tuple(sorted((x - k) % p.m for x in i))


# -- arcs ---------------------------------------------------------------


def arc(coords: Iterable[Union[Fraction, int, str]], p: ModelParams) -> Arc:
    """Build a validated arc from rationals (or strings such as ``"5/2"``)."""
    try:
        a = tuple(Fraction(c) for c in coords)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ValidationError(f"bad arc coordinate: {exc}") from None
    if len(a) != p.d + 1:
        raise ValidationError(f"arc needs {p.d + 1} coordinates, got {len(a)}")
    for x in a:
        if x.denominator == 1:
            raise ValidationError(f"arc coordinate {x} is a vertex")
        if not 0 <= x < p.m:
            raise ValidationError(f"arc coordinate {x} outside [0, {p.m})")
    if any(x >= y for x, y in zip(a, a[1:])):
        raise ValidationError("arc coordinates must be strictly increasing")
    return a


def lamination(arcs: Iterable[Arc]) -> tuple[Arc, ...]:
    """Return the arcs as a tuple, raising if any two intertwine."""
    from .errors import RigidityViolation

    arcs = tuple(arcs)
    for x, y in combinations(arcs, 2):
        if intertwines(x, y):
            raise RigidityViolation(f"arcs {fmt_arc(x)} and {fmt_arc(y)} intertwine")
    return arcs


def _rounded(values: Iterable[int], p: ModelParams):
    vals = [v % p.m for v in values]
    if len(set(vals)) != len(vals):
        return ZERO
    t = tuple(sorted(vals))
    s = set(t)
    if any((i + 1) % p.m in s for i in t):
        return ZERO
    return t


def round_down(a: Arc, p: ModelParams):
    """Move every coordinate down to the nearest vertex."""
    return _rounded((math.floor(x) for x in a), p)


def round_up(a: Arc, p: ModelParams):
    """Move every coordinate up to the nearest vertex (cyclically)."""
    return _rounded((math.ceil(x) for x in a), p)


def fmt_tuple(t: IndexTuple) -> str:
    return ",".join(str(x) for x in t)


def fmt_arc(a: Arc) -> str:
    return ",".join(str(x) for x in a)
