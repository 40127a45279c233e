"""Tropical semifield ``Z^r`` and tropical Y-seed mutation.

In ``(Z^r, +, min)`` ordinary addition plays the role of multiplication and
entrywise minimum plays the role of addition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from .errors import ValidationError

TropicalVector = Tuple[int, ...]
Scalar = int
Value = Union[int, Sequence[int]]


def _same_length(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ValidationError(f"length mismatch: {len(a)} vs {len(b)}")


def trop_add(a: Sequence[int], b: Sequence[int]) -> TropicalVector:
    """Semifield addition: entrywise minimum."""
    _same_length(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def trop_mul(a: Sequence[int], b: Sequence[int]) -> TropicalVector:
    """Semifield multiplication: entrywise integer sum."""
    _same_length(a, b)
    return tuple(x + y for x, y in zip(a, b))


def pos_part(x: Value):
    """``[x]_+``: negative entries replaced by zero."""
    if isinstance(x, int):
        return max(x, 0)
    return tuple(max(v, 0) for v in x)


def neg_part(x: Value):
    """``[x]_-``: magnitudes of negative entries, positives replaced by zero."""
    if isinstance(x, int):
        return max(-x, 0)
    return tuple(max(-v, 0) for v in x)


@dataclass(frozen=True)
class SkewMatrix:
    """Square skew-symmetric integer matrix stored as a tuple of rows."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ValidationError("matrix must be square")
            for j in range(n):
                if r[j] != -rows[j][i]:
                    raise ValidationError(f"not skew-symmetric at ({i}, {j})")

    @classmethod
    def zeros(cls, n: int) -> "SkewMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def mutate_matrix(b: SkewMatrix, k: int) -> SkewMatrix:
    """Matrix mutation at index ``k``."""
    n = b.n
    if not 0 <= k < n:
        raise ValidationError(f"mutation index {k} out of range for size {n}")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-b[i, j])
            else:
                row.append(
                    b[i, j]
                    + pos_part(b[i, k]) * pos_part(b[k, j])
                    - neg_part(b[i, k]) * neg_part(b[k, j])
                )
        rows.append(tuple(row))
    return SkewMatrix(tuple(rows))


def mutate_y_tropical(b: SkewMatrix, v: Sequence[Sequence[int]], k: int) -> tuple[TropicalVector, ...]:
    """Tropical coefficient mutation of ``v`` in direction ``k``."""
    if len(v) != b.n:
        raise ValidationError(f"{len(v)} coefficients for a {b.n}x{b.n} matrix")
    if not 0 <= k < b.n:
        raise ValidationError(f"mutation index {k} out of range for size {b.n}")
    r = len(v[k])
    for vi in v:
        if len(vi) != r:
            raise ValidationError("coefficient vectors differ in length")
    vk_pos = pos_part(v[k])
    vk_neg = neg_part(v[k])
    out = []
    for i, vi in enumerate(v):
        if i == k:
            out.append(tuple(-x for x in vi))
            continue
        bp, bn = pos_part(b[k, i]), neg_part(b[k, i])
        out.append(tuple(x + bp * p - bn * q for x, p, q in zip(vi, vk_pos, vk_neg)))
    return tuple(out)


@dataclass(frozen=True)
class YSeed:
    matrix: SkewMatrix
    coeffs: Tuple[TropicalVector, ...]

    def __post_init__(self):
        coeffs = tuple(tuple(int(x) for x in c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != self.matrix.n:
            raise ValidationError(f"{len(coeffs)} coefficients for a {self.matrix.n}x{self.matrix.n} matrix")

    def mutate(self, k: int) -> "YSeed":
        return YSeed(mutate_matrix(self.matrix, k), mutate_y_tropical(self.matrix, self.coeffs, k))
