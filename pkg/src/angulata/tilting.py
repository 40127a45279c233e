"""Cluster tilting objects: maximal non-intertwining collections of tuples.

Compatibility between the admissible tuples of one parameter set is
precomputed once as integer bitmasks (bit ``i`` is the ``i``-th tuple of
:func:`enumerate_objects`), which keeps enumeration, replacement search and
graph exploration cheap.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    BudgetExceeded,
    InvariantViolation,
    NotMutable,
    ValidationError,
)
from .model import (
    IndexTuple,
    ModelParams,
    enumerate_objects,
    fmt_tuple,
    intertwines,
    is_admissible,
)

DEFAULT_MAX_NODES = 10**6
DEFAULT_MAX_SECONDS = 60.0


class _ObjectTable:
    def __init__(self, p: ModelParams):
        self.params = p
        self.objects = enumerate_objects(p)
        self.position = {o: i for i, o in enumerate(self.objects)}
        k = len(self.objects)
        self.full = (1 << k) - 1
        compat = [0] * k
        for i, j in combinations(range(k), 2):
            if not intertwines(self.objects[i], self.objects[j]):
                compat[i] |= 1 << j
                compat[j] |= 1 << i
        self.compat = compat

    def mask(self, tuples: Iterable[IndexTuple]) -> int:
        out = 0
        for t in tuples:
            try:
                out |= 1 << self.position[t]
            except KeyError:
                raise ValidationError(f"{t} is not an admissible tuple for {self.params}") from None
        return out

    def members(self, mask: int) -> tuple[IndexTuple, ...]:
        out = []
        while mask:
            low = mask & -mask
            out.append(self.objects[low.bit_length() - 1])
            mask ^= low
        return tuple(out)

    def common_compat(self, mask: int) -> int:
        """Objects outside ``mask`` compatible with every member of ``mask``."""
        acc = self.full
        m = mask
        while m:
            low = m & -m
            acc &= self.compat[low.bit_length() - 1]
            m ^= low
        return acc & ~mask


@lru_cache(maxsize=None)
def _table(p: ModelParams) -> _ObjectTable:
    return _ObjectTable(p)


def _popcount(x: int) -> int:
    return bin(x).count("1")


@lru_cache(maxsize=None)
def tilting_size(p: ModelParams) -> int:
    """Number of summands of a cluster tilting object for ``p``.

    This is the largest size of a non-intertwining collection; smaller
    collections can already be maximal under inclusion when ``d > 1``.
    """
    tab = _table(p)
    best = 0

    def rec(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand and size + _popcount(cand) > best:
            low = cand & -cand
            cand ^= low
            rec(size + 1, cand & tab.compat[low.bit_length() - 1])

    rec(0, tab.full)
    return best


@dataclass(frozen=True)
class ClusterTilting:
    """An ordered cluster tilting object.

    ``summands`` is an ordered tuple; the order fixes the coordinate layout
    of index vectors. Mutation keeps each slot in place.
    """

    params: ModelParams
    summands: tuple[IndexTuple, ...]
    _checked: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        summands = tuple(tuple(s) for s in self.summands)
        object.__setattr__(self, "summands", summands)
        if self._checked:
            _validate_tilting(summands, self.params)

    @classmethod
    def _trusted(cls, p: ModelParams, summands: tuple[IndexTuple, ...]) -> "ClusterTilting":
        return cls(p, summands, _checked=False)

    @classmethod
    def from_lists(cls, p: ModelParams, summands: Iterable[Iterable[int]]) -> "ClusterTilting":
        return cls(p, tuple(tuple(s) for s in summands))

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self) -> Iterator[IndexTuple]:
        return iter(self.summands)

    def __contains__(self, j) -> bool:
        return tuple(j) in self.summands

    @property
    def key(self) -> tuple[IndexTuple, ...]:
        """Order-independent identity: the sorted summands."""
        return tuple(sorted(self.summands))

    def slot(self, j: IndexTuple) -> int:
        try:
            return self.summands.index(tuple(j))
        except ValueError:
            raise ValidationError(f"{j} is not a summand") from None

    def canonical(self) -> "ClusterTilting":
        return ClusterTilting._trusted(self.params, self.key)

    def reordered(self, order: Sequence[IndexTuple]) -> "ClusterTilting":
        order = tuple(tuple(o) for o in order)
        if sorted(order) != list(self.key):
            raise ValidationError("reordering must be a permutation of the summands")
        return ClusterTilting._trusted(self.params, order)

    def same_object(self, other: "ClusterTilting") -> bool:
        return self.params == other.params and self.key == other.key

    def __str__(self) -> str:
        return "{" + "; ".join(fmt_tuple(s) for s in self.summands) + "}"


def _validate_tilting(summands: tuple[IndexTuple, ...], p: ModelParams) -> None:
    for s in summands:
        if not is_admissible(s, p):
            raise ValidationError(f"{s} is not admissible")
    if len(set(summands)) != len(summands):
        raise ValidationError("repeated summand")
    tab = _table(p)
    mask = tab.mask(summands)
    for s in summands:
        i = tab.position[s]
        if mask & ~(tab.compat[i] | 1 << i):
            other = tab.members(mask & ~(tab.compat[i] | 1 << i))[0]
            raise ValidationError(f"summands {s} and {other} intertwine")
    if len(summands) != tilting_size(p):
        raise ValidationError(
            f"collection has {len(summands)} members, a tilting object needs {tilting_size(p)}"
        )


def is_cluster_tilting(coll: Iterable[IndexTuple], p: ModelParams) -> bool:
    """True iff ``coll`` is pairwise non-intertwining of the largest possible size.

    Such a collection admits no admissible extension; the converse fails for
    ``d > 1``.
    """
    coll = [tuple(c) for c in coll]
    tab = _table(p)
    mask = tab.mask(coll)
    if bin(mask).count("1") != len(coll):
        raise ValidationError("repeated member")
    for c in coll:
        i = tab.position[c]
        if mask & ~(tab.compat[i] | 1 << i):
            return False
    return len(coll) == tilting_size(p)


class _Budget:
    def __init__(self, max_nodes: Optional[int], max_seconds: Optional[float]):
        if max_nodes is not None and max_nodes <= 0:
            raise ValidationError("max_nodes must be positive")
        if max_seconds is not None and max_seconds <= 0:
            raise ValidationError("max_seconds must be positive")
        self.max_nodes = max_nodes
        self.deadline = None if max_seconds is None else time.monotonic() + max_seconds
        self.nodes = 0

    def tick(self) -> bool:
        """Count one node; return False once the budget is spent."""
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            return False
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            return False
        return True


def _largest_sets(tab: _ObjectTable, chosen: int, cand: int, size: int, budget: _Budget) -> Iterator[int]:
    # Cliques of exactly ``size`` members extending ``chosen``, in lex order.
    def rec(r: int, k: int, p: int):
        if not budget.tick():
            raise BudgetExceeded("enumeration budget exhausted")
        if k == size:
            yield r
            return
        while p and k + _popcount(p) >= size:
            low = p & -p
            p ^= low
            yield from rec(r | low, k + 1, p & tab.compat[low.bit_length() - 1])

    yield from rec(chosen, _popcount(chosen), cand)


def complete_to_tilting(partial: Iterable[IndexTuple], p: ModelParams) -> ClusterTilting:
    """Deterministically extend a compatible collection to a tilting object.

    Tuples are added greedily in lexicographic order, backtracking whenever
    the greedy choice cannot reach full size. Summands come out sorted.
    Raises :class:`ValidationError` if no extension exists.
    """
    partial = [tuple(x) for x in partial]
    for x in partial:
        if not is_admissible(x, p):
            raise ValidationError(f"{x} is not admissible")
    for x, y in combinations(partial, 2):
        if intertwines(x, y):
            raise ValidationError(f"{fmt_tuple(x)} and {fmt_tuple(y)} intertwine")
    tab = _table(p)
    base = tab.mask(partial)
    size = tilting_size(p)
    for found in _largest_sets(tab, base, tab.common_compat(base), size, _Budget(None, None)):
        return ClusterTilting._trusted(p, tab.members(found))
    raise ValidationError(f"no tilting object contains {[fmt_tuple(x) for x in partial]}")


def enumerate_tiltings(
    p: ModelParams,
    max_nodes: Optional[int] = DEFAULT_MAX_NODES,
    max_seconds: Optional[float] = DEFAULT_MAX_SECONDS,
) -> list[ClusterTilting]:
    """All cluster tilting objects, summands sorted, listed in lex order.

    Raises :class:`BudgetExceeded` (with the tiltings found so far in
    ``partial``) if the search budget runs out.
    """
    tab = _table(p)
    size = tilting_size(p)
    found: list[ClusterTilting] = []
    budget = _Budget(max_nodes, max_seconds)
    try:
        for mask in _largest_sets(tab, 0, tab.full, size, budget):
            found.append(ClusterTilting._trusted(p, tab.members(mask)))
    except BudgetExceeded as exc:
        found.sort(key=lambda t: t.key)
        raise BudgetExceeded(f"{exc} after {len(found)} tiltings", partial=found) from None
    found.sort(key=lambda t: t.key)
    return found


def find_replacement(t: ClusterTilting, pos: int) -> Optional[IndexTuple]:
    """The unique tuple that can replace summand ``pos``, or None."""
    if not 0 <= pos < len(t):
        raise ValidationError(f"position {pos} out of range 0..{len(t) - 1}")
    tab = _table(t.params)
    rest = tab.mask(t.summands) & ~tab.mask([t.summands[pos]])
    cand = tab.common_compat(rest) & ~tab.mask([t.summands[pos]])
    found = tab.members(cand)
    if len(found) > 1:
        raise InvariantViolation(
            f"summand {t.summands[pos]} of {t} has {len(found)} replacements: {found}"
        )
    return found[0] if found else None


def mutable_positions(t: ClusterTilting) -> list[int]:
    return [i for i in range(len(t)) if find_replacement(t, i) is not None]


@dataclass(frozen=True)
class ExchangeFrame:
    """The ``2d+2`` vertices spanned by an exchanged pair.

    ``r_parity`` is 0 if the outgoing summand sits at the even positions
    ``b[0], b[2], ...`` and 1 if it sits at the odd positions.
    """

    b: tuple[int, ...]
    r_parity: int

    @property
    def outgoing(self) -> IndexTuple:
        return self.b[self.r_parity :: 2]

    @property
    def incoming(self) -> IndexTuple:
        return self.b[1 - self.r_parity :: 2]

    @property
    def r_positions(self) -> range:
        return range(self.r_parity, len(self.b), 2)


def frame_for(outgoing: IndexTuple, incoming: IndexTuple) -> ExchangeFrame:
    b = tuple(sorted(set(outgoing) | set(incoming)))
    if len(b) != len(outgoing) + len(incoming):
        raise InvariantViolation(f"exchanged tuples {outgoing} and {incoming} share a vertex")
    parity = 0 if b[0] == outgoing[0] else 1
    frame = ExchangeFrame(b, parity)
    if frame.outgoing != tuple(outgoing) or frame.incoming != tuple(incoming):
        raise InvariantViolation(f"exchanged tuples {outgoing} and {incoming} do not alternate")
    return frame


def mutate(t: ClusterTilting, pos: int) -> tuple[ClusterTilting, ExchangeFrame]:
    """Replace summand ``pos`` by its replacement, keeping the slot."""
    new = find_replacement(t, pos)
    if new is None:
        raise NotMutable(f"summand {fmt_tuple(t.summands[pos])} of {t} is not mutable")
    frame = frame_for(t.summands[pos], new)
    summands = t.summands[:pos] + (new,) + t.summands[pos + 1 :]
    return ClusterTilting._trusted(t.params, summands), frame


def cube_term(frame: ExchangeFrame, chosen: Iterable[int], step: int) -> IndexTuple:
    """Shift the chosen positions of the outgoing tuple along the frame.

    ``step=+1`` moves each chosen vertex to its cyclic successor in ``b``,
    ``step=-1`` to its cyclic predecessor. Result is sorted (not checked for
    admissibility).
    """
    b = frame.b
    chosen = set(chosen)
    k = len(b)
    return tuple(sorted(b[(i + step) % k] if i in chosen else b[i] for i in frame.r_positions))


@dataclass(frozen=True)
class ExchangeAngles:
    """Middle terms of the two exchange angles of a mutation.

    ``left[j-1]`` holds the summands of the ``j``-th middle term of the left
    angle ``E -> L1 -> ... -> Ld -> E*``; ``right[j-1]`` those of the
    ``j``-th term of the right angle ``E* -> Rd -> ... -> R1 -> E``.
    """

    left: tuple[tuple[IndexTuple, ...], ...]
    right: tuple[tuple[IndexTuple, ...], ...]
    outgoing: IndexTuple
    incoming: IndexTuple


def exchange_angles(t: ClusterTilting, frame: ExchangeFrame) -> ExchangeAngles:
    """Middle terms read off the frame by the successor/predecessor cube."""
    p = t.params
    out = frame.outgoing
    if out not in t:
        raise ValidationError(f"frame outgoing tuple {out} is not a summand of {t}")
    rest = set(t.summands) - {out}
    positions = list(frame.r_positions)
    sides = []
    for step in (1, -1):
        terms = []
        for j in range(1, p.d + 1):
            term = []
            for chosen in combinations(positions, j):
                cand = cube_term(frame, chosen, step)
                if not is_admissible(cand, p):
                    continue
                if cand not in rest:
                    raise InvariantViolation(
                        f"middle term {fmt_tuple(cand)} of the exchange at {fmt_tuple(out)} "
                        f"is not a summand of {t}"
                    )
                term.append(cand)
            terms.append(tuple(sorted(term)))
        sides.append(tuple(terms))
    return ExchangeAngles(sides[0], sides[1], out, frame.incoming)


# -- exchange graph ------------------------------------------------------


@dataclass(eq=False)
class ExchangeGraph:
    """Tiltings (as sorted summand tuples) joined by single mutations.

    ``edges`` holds ``(u, v, removed, added)`` with ``u < v`` node ids;
    ``adjacency[u]`` lists ``(v, removed, added)`` seen from ``u``.
    """

    params: ModelParams
    nodes: list[tuple[IndexTuple, ...]]
    adjacency: list[list[tuple[int, IndexTuple, IndexTuple]]]
    truncated: bool = False

    def __post_init__(self):
        self.ids = {k: i for i, k in enumerate(self.nodes)}

    @property
    def edges(self) -> list[tuple[int, int, IndexTuple, IndexTuple]]:
        out = []
        for u, nbrs in enumerate(self.adjacency):
            for v, removed, added in nbrs:
                if u < v:
                    out.append((u, v, removed, added))
        return out

    def tilting(self, node: int) -> ClusterTilting:
        return ClusterTilting._trusted(self.params, self.nodes[node])

    def node_of(self, t: ClusterTilting) -> int:
        return self.ids[t.key]

    def distances_to(self, target: int) -> list[Optional[int]]:
        dist: list[Optional[int]] = [None] * len(self.nodes)
        dist[target] = 0
        queue = deque([target])
        while queue:
            u = queue.popleft()
            for v, _, _ in self.adjacency[u]:
                if dist[v] is None:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def to_dot(self) -> str:
        lines = ["graph exchange {"]
        for i, k in enumerate(self.nodes):
            label = ";".join(fmt_tuple(s) for s in k)
            lines.append(f'  n{i} [label="{label}"];')
        for u, v, removed, added in self.edges:
            lines.append(f'  n{u} -- n{v} [label="{fmt_tuple(removed)} -> {fmt_tuple(added)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def exchange_graph(
    p: ModelParams,
    seed: Optional[ClusterTilting] = None,
    max_nodes: Optional[int] = DEFAULT_MAX_NODES,
    max_seconds: Optional[float] = DEFAULT_MAX_SECONDS,
) -> ExchangeGraph:
    """Breadth-first exploration of the mutation graph from ``seed``.

    Node ids follow discovery order (seed first, neighbours by slot of the
    sorted summands). When a budget runs out the partial graph is returned
    with ``truncated=True``.
    """
    start = complete_to_tilting([], p) if seed is None else seed.canonical()
    if start.params != p:
        raise ValidationError("seed belongs to different parameters")
    budget = _Budget(max_nodes, max_seconds)
    nodes = [start.key]
    ids = {start.key: 0}
    adjacency: list[list] = [[]]
    truncated = False
    queue = deque([0])
    while queue:
        u = queue.popleft()
        t = ClusterTilting._trusted(p, nodes[u])
        for pos in range(len(t)):
            new = find_replacement(t, pos)
            if new is None:
                continue
            key = tuple(sorted(t.summands[:pos] + (new,) + t.summands[pos + 1 :]))
            v = ids.get(key)
            if v is None:
                if truncated or not budget.tick():
                    truncated = True
                    continue
                v = len(nodes)
                ids[key] = v
                nodes.append(key)
                adjacency.append([])
                queue.append(v)
            if all(w != v for w, _, _ in adjacency[u]):
                adjacency[u].append((v, t.summands[pos], new))
                adjacency[v].append((u, new, t.summands[pos]))
    return ExchangeGraph(p, nodes, adjacency, truncated)


@lru_cache(maxsize=32)
def cached_exchange_graph(p: ModelParams) -> ExchangeGraph:
    """Full exchange graph from the default seed, shared between queries."""
    return exchange_graph(p)
