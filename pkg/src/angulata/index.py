"""Index vectors and their mutation.

An :class:`IndexVector` is an integer vector over an explicit ordered basis
(the summands of a tilting object, or arbitrary labels for data transcribed
by hand). Arithmetic between vectors over different bases is refused.

For objects that are not summands the index is obtained by transporting a
unit vector along a path of mutations with :func:`apply_index_substitution`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Iterable, Optional, Sequence

from .errors import (
    BasisMismatch,
    ExchangeGraphDisconnected,
    InvariantViolation,
    RigidityViolation,
    UnsupportedDimension,
    ValidationError,
)
from .model import IndexTuple, ModelParams, fmt_tuple, intertwines, is_admissible
from .tilting import (
    ClusterTilting,
    ExchangeGraph,
    cached_exchange_graph,
    complete_to_tilting,
    exchange_angles,
    mutate,
)


@dataclass(frozen=True)
class IndexVector:
    basis: tuple[Hashable, ...]
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.basis) != len(self.coeffs):
            raise ValidationError(f"{len(self.coeffs)} coefficients for a basis of {len(self.basis)}")

    @classmethod
    def zero(cls, basis: Sequence[Hashable]) -> "IndexVector":
        return cls(tuple(basis), (0,) * len(basis))

    @classmethod
    def unit(cls, basis: Sequence[Hashable], slot: int) -> "IndexVector":
        coeffs = [0] * len(basis)
        coeffs[slot] = 1
        return cls(tuple(basis), tuple(coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, slot: int) -> int:
        return self.coeffs[slot]

    def coefficient(self, label: Hashable) -> int:
        return self.coeffs[self.basis.index(label)]

    def _check(self, other: "IndexVector") -> None:
        if not isinstance(other, IndexVector):
            raise TypeError(f"cannot combine IndexVector with {type(other).__name__}")
        if other.basis != self.basis:
            raise BasisMismatch("index vectors are expressed in different bases")

    def __add__(self, other: "IndexVector") -> "IndexVector":
        self._check(other)
        return IndexVector(self.basis, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "IndexVector") -> "IndexVector":
        self._check(other)
        return IndexVector(self.basis, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "IndexVector":
        return IndexVector(self.basis, tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> "IndexVector":
        return IndexVector(self.basis, tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def reordered(self, basis: Sequence[Hashable]) -> "IndexVector":
        """The same vector with coordinates permuted into ``basis`` order."""
        basis = tuple(basis)
        if set(basis) != set(self.basis) or len(basis) != len(self.basis):
            raise BasisMismatch("target basis is not a permutation of the current one")
        where = {b: i for i, b in enumerate(self.basis)}
        return IndexVector(basis, tuple(self.coeffs[where[b]] for b in basis))

    def relabel(self, slot: int, label: Hashable) -> "IndexVector":
        basis = self.basis[:slot] + (label,) + self.basis[slot + 1 :]
        return IndexVector(basis, self.coeffs)

    def to_dict(self) -> dict:
        return {"basis": [_label_out(b) for b in self.basis], "coeffs": list(self.coeffs)}

    @classmethod
    def from_dict(cls, data: dict) -> "IndexVector":
        return cls(tuple(_label_in(b) for b in data["basis"]), tuple(data["coeffs"]))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


def _label_out(label):
    return list(label) if isinstance(label, tuple) else label


def _label_in(label):
    return tuple(label) if isinstance(label, list) else label


class Branch(enum.Enum):
    """Which exchange angle carries the outgoing summand in a resolution.

    ``AT_BOTTOM``: the summand only occurs in the degree-0 term, so the
    suspended incoming object is used. ``AT_TOP``: it only occurs in the
    degree-``d`` term, so the incoming object is used.
    """

    AT_BOTTOM = "bottom"
    AT_TOP = "top"


def index_of_summand(t: ClusterTilting, j: IndexTuple) -> IndexVector:
    j = tuple(j)
    if j not in t:
        raise ValidationError(f"{fmt_tuple(j)} is not a summand of {t}")
    return IndexVector.unit(t.summands, t.slot(j))


def index_exchange_objects(t: ClusterTilting, pos: int) -> tuple[IndexVector, IndexVector]:
    """Indices of the incoming summand and of its suspension, over ``t``.

    Returns ``(index(E*), index(Sigma E*))`` read off the two exchange
    angles at slot ``pos``.
    """
    _, frame = mutate(t, pos)
    angles = exchange_angles(t, frame)
    d = t.params.d
    basis = t.summands
    slot = {s: i for i, s in enumerate(basis)}

    sigma = [0] * len(basis)
    sigma[pos] = 1
    for j, term in enumerate(angles.right, start=1):
        for s in term:
            sigma[slot[s]] += (-1) ** j

    estar = [0] * len(basis)
    estar[pos] = (-1) ** d
    for j, term in enumerate(angles.left, start=1):
        for s in term:
            estar[slot[s]] += (-1) ** (d - j)

    if sigma[pos] != 1 or estar[pos] != (-1) ** d:
        raise InvariantViolation(f"exchange middle terms at slot {pos} of {t} contain the outgoing summand")
    return IndexVector(basis, tuple(estar)), IndexVector(basis, tuple(sigma))


def _outgoing_parity(idx_estar: IndexVector, pos: int) -> int:
    c = idx_estar[pos]
    if c not in (1, -1):
        raise ValidationError(f"index of the incoming summand has coefficient {c} at slot {pos}")
    return 0 if c == 1 else 1


def apply_index_substitution_general(
    v: IndexVector,
    pos: int,
    idx_sigma_estar: IndexVector,
    idx_estar: IndexVector,
    branch: Branch,
    incoming: Hashable,
) -> IndexVector:
    """Index over the mutated tilting object, any dimension.

    ``branch`` states where the outgoing summand sits in the resolution of
    the object; the index alone does not determine this for even ``d``.
    The result is expressed over ``v.basis`` with slot ``pos`` relabelled
    ``incoming``.
    """
    v._check(idx_sigma_estar)
    v._check(idx_estar)
    if idx_sigma_estar[pos] != 1:
        raise ValidationError(f"index of the suspended incoming summand has coefficient {idx_sigma_estar[pos]} at slot {pos}")
    sign = -1 if _outgoing_parity(idx_estar, pos) else 1  # (-1)^d
    c = v[pos]
    aux = idx_sigma_estar if branch is Branch.AT_BOTTOM else idx_estar
    coeffs = [x - abs(c) * a for x, a in zip(v.coeffs, aux.coeffs)]
    if coeffs[pos] != 0:
        raise ValidationError(
            f"branch {branch.value} is inconsistent with coefficient {c} at slot {pos}"
        )
    coeffs[pos] = sign * c
    return IndexVector(v.basis, tuple(coeffs)).relabel(pos, incoming)


def apply_index_substitution(
    v: IndexVector,
    pos: int,
    idx_sigma_estar: IndexVector,
    idx_estar: IndexVector,
    incoming: Hashable,
) -> IndexVector:
    """Index over the mutated tilting object for odd ``d``.

    The sign of the coefficient at ``pos`` selects the branch. The parity of
    ``d`` is read from ``idx_estar`` (its coefficient at ``pos`` is
    ``(-1)^d``); even ``d`` is refused.
    """
    v._check(idx_estar)
    if _outgoing_parity(idx_estar, pos) == 0:
        raise UnsupportedDimension(
            "the sign rule needs odd d; use apply_index_substitution_general with an explicit branch"
        )
    branch = Branch.AT_BOTTOM if v[pos] >= 0 else Branch.AT_TOP
    return apply_index_substitution_general(v, pos, idx_sigma_estar, idx_estar, branch, incoming)


def mutate_index(v: IndexVector, t: ClusterTilting, pos: int) -> tuple[IndexVector, ClusterTilting]:
    """Mutate ``t`` at ``pos`` and carry ``v`` (expressed over ``t``) along."""
    if v.basis != t.summands:
        raise BasisMismatch("vector is not expressed over the given tilting object")
    idx_estar, idx_sigma = index_exchange_objects(t, pos)
    new_t, frame = mutate(t, pos)
    return apply_index_substitution(v, pos, idx_sigma, idx_estar, frame.incoming), new_t


def transport(v: IndexVector, start: ClusterTilting, slots: Iterable[int]) -> tuple[IndexVector, ClusterTilting]:
    """Apply :func:`mutate_index` along a sequence of slots."""
    t = start
    for pos in slots:
        v, t = mutate_index(v, t, pos)
    return v, t


def _require_odd(p: ModelParams) -> None:
    if not p.odd:
        raise UnsupportedDimension(f"path transport of indices needs odd d, got d={p.d}")


@lru_cache(maxsize=4096)
def _distances(graph: ExchangeGraph, target: int):
    return graph.distances_to(target)


def mutation_path(
    start: ClusterTilting, target: ClusterTilting, graph: Optional[ExchangeGraph] = None
) -> list[int]:
    """Slots to mutate, in order, to turn ``start`` into ``target``.

    Shortest path in the exchange graph; among equally short continuations
    the neighbour with the smallest node id wins. Slots refer to the order
    of ``start`` (mutation keeps slots in place).
    """
    p = start.params
    graph = graph or cached_exchange_graph(p)
    try:
        u = graph.node_of(start)
        goal = graph.node_of(target)
    except KeyError:
        raise ExchangeGraphDisconnected("tilting object not reached by the exchange graph") from None
    dist = _distances(graph, goal)
    if dist[u] is None:
        raise ExchangeGraphDisconnected(f"no mutation path from {start} to {target}")
    slots = []
    current = start
    while dist[u]:
        nxt = min(
            (v, removed) for v, removed, _ in graph.adjacency[u] if dist[v] is not None and dist[v] == dist[u] - 1
        )
        v, removed = nxt
        pos = current.slot(removed)
        slots.append(pos)
        current, _ = mutate(current, pos)
        u = v
    return slots


def compute_index(
    t: ClusterTilting,
    j: IndexTuple,
    source: Optional[ClusterTilting] = None,
    graph: Optional[ExchangeGraph] = None,
) -> IndexVector:
    """Index of the indecomposable ``O_j`` over ``t`` (odd ``d`` only).

    Starts from a tilting object containing ``j`` (``source``, or the
    lexicographically first one) where the index is a unit vector, and
    transports it along a shortest mutation path to ``t``.
    """
    p = t.params
    j = tuple(j)
    if not is_admissible(j, p):
        raise ValidationError(f"{j} is not admissible")
    if j in t:
        return index_of_summand(t, j)
    _require_odd(p)
    if source is None:
        source = complete_to_tilting([j], p)
    elif j not in source:
        raise ValidationError(f"source tilting object does not contain {fmt_tuple(j)}")
    if graph is None:
        return _default_index(t, j, source)
    return _transported_index(t, j, source, graph)


def _transported_index(t: ClusterTilting, j: IndexTuple, source: ClusterTilting, graph) -> IndexVector:
    slots = mutation_path(source, t, graph)
    v, end = transport(index_of_summand(source, j), source, slots)
    if not end.same_object(t):
        raise InvariantViolation("mutation path did not end at the target")
    return v.reordered(t.summands)


@lru_cache(maxsize=65536)
def _default_index(t: ClusterTilting, j: IndexTuple, source: ClusterTilting) -> IndexVector:
    return _transported_index(t, j, source, cached_exchange_graph(t.params))


def compute_index_sum(t: ClusterTilting, objs: Sequence[IndexTuple], graph: Optional[ExchangeGraph] = None) -> IndexVector:
    """Index of a rigid direct sum: the sum of the indices of its summands."""
    objs = [tuple(o) for o in objs]
    for a in range(len(objs)):
        for b in range(a + 1, len(objs)):
            if intertwines(objs[a], objs[b]):
                raise RigidityViolation(f"{fmt_tuple(objs[a])} and {fmt_tuple(objs[b])} intertwine")
    total = IndexVector.zero(t.summands)
    for o in objs:
        total = total + compute_index(t, o, graph=graph)
    return total
