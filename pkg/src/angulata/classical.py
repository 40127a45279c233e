"""The classical case ``d = 1``: polygon triangulations.

Provides the quiver (exchange matrix) of a triangulation, exchange triangles
computed directly from the two triangles around a diagonal, and a check
that the index substitution, the exchange-triangle substitution and tropical
Y-seed mutation all agree.

Orientation convention: inside a triangle with vertices ``x < y < z`` the
quiver has arrows ``(x,y) -> (x,z) -> (y,z) -> (x,y)`` (boundary edges
dropped), and ``b[j][k]`` counts arrows ``k -> j`` minus arrows ``j -> k``.
With this choice the summands ``E_j`` of the right exchange term occur with
multiplicity ``[b[m][j]]_+`` and those of the left term with
``[b[m][j]]_-``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Optional

from .errors import InvariantViolation, UnsupportedDimension
from .index import IndexVector, apply_index_substitution, index_exchange_objects
from .model import IndexTuple, intertwines, suspend
from .tilting import ClusterTilting, exchange_angles, mutate
from .tropical import SkewMatrix, mutate_y_tropical, neg_part, pos_part


def _require_d1(t: ClusterTilting) -> None:
    if t.params.d != 1:
        raise UnsupportedDimension(f"only defined for d=1, got d={t.params.d}")


def triangles(t: ClusterTilting) -> list[tuple[int, int, int]]:
    """The triangles of the polygon triangulation, vertices sorted."""
    _require_d1(t)
    m = t.params.m
    sides = set(t.summands) | {tuple(sorted((i, (i + 1) % m))) for i in range(m)}
    return [
        tri
        for tri in combinations(range(m), 3)
        if all(tuple(sorted(e)) in sides for e in combinations(tri, 2))
    ]


def quiver_b_matrix_d1(t: ClusterTilting) -> SkewMatrix:
    """Exchange matrix of the triangulation, rows/columns in slot order."""
    _require_d1(t)
    slot = {s: i for i, s in enumerate(t.summands)}
    n = len(t)
    b = [[0] * n for _ in range(n)]
    for x, y, z in triangles(t):
        cycle = [(x, y), (x, z), (y, z)]
        for src, dst in zip(cycle, cycle[1:] + cycle[:1]):
            if src in slot and dst in slot:
                b[slot[dst]][slot[src]] += 1
                b[slot[src]][slot[dst]] -= 1
    return SkewMatrix(tuple(tuple(r) for r in b))


def _hom_nonzero(x: IndexTuple, y: IndexTuple, p) -> bool:
    # Hom(O_x, O_y) = Hom(O_x, Sigma O_{y+1}) is nonzero iff x and y+1 cross
    return intertwines(x, suspend(y, p, -1))


@dataclass(frozen=True)
class ExchangeTriangles:
    outgoing: IndexTuple
    incoming: IndexTuple
    left: tuple[IndexTuple, ...]
    right: tuple[IndexTuple, ...]


def exchange_triangles(t: ClusterTilting, pos: int) -> ExchangeTriangles:
    """Exchange triangles read off the quadrilateral around a diagonal.

    The two triangles on either side of the diagonal ``(a, c)`` give the
    quadrilateral ``a, b, c, d``; the new diagonal is ``(b, d)``. Each side
    that is a diagonal goes to the left term if the outgoing summand maps
    to it and to the right term if it maps to the outgoing summand.
    """
    _require_d1(t)
    p = t.params
    a, c = t.summands[pos]
    apex = [v for tri in triangles(t) if a in tri and c in tri for v in tri if v not in (a, c)]
    if len(apex) != 2:
        raise InvariantViolation(f"diagonal {(a, c)} borders {len(apex)} triangles")
    b, d = sorted(apex)
    m = p.m
    left, right = [], []
    for side in ((a, b), (b, c), (c, d), (a, d)):
        side = tuple(sorted(side))
        if (side[1] - side[0]) % m in (1, m - 1):
            continue
        out_to_side = _hom_nonzero(t.summands[pos], side, p)
        side_to_out = _hom_nonzero(side, t.summands[pos], p)
        if out_to_side == side_to_out:
            raise InvariantViolation(f"side {side} of the quadrilateral around {(a, c)} is unclassified")
        (left if out_to_side else right).append(side)
    return ExchangeTriangles((a, c), (b, d), tuple(sorted(left)), tuple(sorted(right)))


def dk_substitution(v: IndexVector, t: ClusterTilting, pos: int) -> IndexVector:
    """Classical index mutation: substitute for the outgoing summand.

    A positive coefficient ``c`` of ``[E_m]`` becomes ``c(-[E*] + [right])``,
    a negative one ``c(-[E*] + [left])``.
    """
    tri = exchange_triangles(t, pos)
    c = v[pos]
    middle = tri.right if c > 0 else tri.left
    coeffs = list(v.coeffs)
    coeffs[pos] = -c
    if c:
        for s in middle:
            coeffs[t.slot(s)] += c
    return IndexVector(v.basis, tuple(coeffs)).relabel(pos, tri.incoming)


@dataclass
class BridgeReport:
    tilting: ClusterTilting
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, pos: int, what: str, expected, got) -> None:
        self.failures.append((str(self.tilting), pos, what, expected, got))


def _probe_vectors(n: int, limit: int = 243, seed: int = 0) -> list[tuple[int, ...]]:
    """All of ``{-1,0,1}^n`` when small, else seeded samples from ``[-2,2]^n``."""
    if 3**n <= limit:
        vecs = list(product((-1, 0, 1), repeat=n))
    else:
        rng = random.Random(seed)
        vecs = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(limit)]
    # every coordinate on its own, both signs
    for i in range(n):
        for c in (-2, 2):
            e = [0] * n
            e[i] = c
            vecs.append(tuple(e))
    return vecs


def d1_bridge_check(t: ClusterTilting, probes: Optional[list[tuple[int, ...]]] = None) -> BridgeReport:
    """Compare exchange data and index mutation against the quiver picture.

    For every position: middle terms from the cube rule versus the
    quadrilateral, multiplicities versus ``[b_mj]_+`` / ``[b_mj]_-``, and
    index substitution versus the classical substitution versus tropical
    Y-seed mutation on a set of probe vectors (packed as the ``r``
    coordinates of a single tropical Y-seed).
    """
    _require_d1(t)
    report = BridgeReport(t)
    bmat = quiver_b_matrix_d1(t)
    n = len(t)
    probes = probes if probes is not None else _probe_vectors(n)
    for pos in range(n):
        _, frame = mutate(t, pos)
        angles = exchange_angles(t, frame)
        tri = exchange_triangles(t, pos)
        engine_left, engine_right = angles.left[0], angles.right[0]
        if engine_left != tri.left:
            report.fail(pos, "left middle", tri.left, engine_left)
        if engine_right != tri.right:
            report.fail(pos, "right middle", tri.right, engine_right)
        for j, s in enumerate(t.summands):
            want_r, want_l = pos_part(bmat[pos, j]), neg_part(bmat[pos, j])
            got_r, got_l = engine_right.count(s), engine_left.count(s)
            if (got_r, got_l) != (want_r, want_l):
                report.fail(pos, f"multiplicity of {s}", (want_r, want_l), (got_r, got_l))

        idx_estar, idx_sigma = index_exchange_objects(t, pos)
        coeffs = [tuple(v[i] for v in probes) for i in range(n)]
        tropical = mutate_y_tropical(bmat, coeffs, pos)
        for k, vec in enumerate(probes):
            v = IndexVector(t.summands, vec)
            ours = apply_index_substitution(v, pos, idx_sigma, idx_estar, frame.incoming)
            dk = dk_substitution(v, t, pos)
            trop = tuple(tropical[i][k] for i in range(n))
            report.checked += 1
            if ours != dk:
                report.fail(pos, f"substitution vs exchange triangles on {vec}", dk.coeffs, ours.coeffs)
            if ours.coeffs != trop:
                report.fail(pos, f"substitution vs tropical mutation on {vec}", trop, ours.coeffs)
    return report
