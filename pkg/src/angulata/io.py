"""Parsing, JSON file formats and bundled fixtures."""

from __future__ import annotations

import json
import os
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Union

from .errors import ValidationError
from .index import IndexVector
from .model import Arc, IndexTuple, ModelParams, arc, index_tuple
from .tilting import ClusterTilting
from .tropical import SkewMatrix

PathLike = Union[str, Path]
FIXTURE_ENV = "ANGULATA_FIXTURE_DIR"


def _split(text: str) -> list[str]:
    parts = [s.strip() for s in text.strip().strip("()[]{}").split(",")]
    if not parts or any(not s for s in parts):
        raise ValidationError(f"malformed list: {text!r}")
    return parts


def parse_ints(text: str) -> tuple[int, ...]:
    """``"1,-2,0"`` -> ``(1, -2, 0)``."""
    try:
        return tuple(int(s) for s in _split(text))
    except ValueError:
        raise ValidationError(f"expected comma-separated integers: {text!r}") from None


def parse_tuple(text: str, p: ModelParams) -> IndexTuple:
    return index_tuple(parse_ints(text), p)


def parse_arc(text: str, p: ModelParams) -> Arc:
    """``"1/2,5/2"`` (decimals such as ``2.5`` are accepted too)."""
    return arc(_split(text), p)


def _read_json(path: PathLike) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON ({exc})") from None


def _write_json(data: Any, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(data))


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _field(data: dict, key: str, where: str):
    if not isinstance(data, dict) or key not in data:
        raise ValidationError(f"{where}: missing field {key!r}")
    return data[key]


# -- tilting objects ----------------------------------------------------


def tilting_to_dict(t: ClusterTilting) -> dict:
    return {"d": t.params.d, "n": t.params.n, "summands": [list(s) for s in t.summands]}


def tilting_from_dict(data: dict, where: str = "tilting") -> ClusterTilting:
    d, n = _field(data, "d", where), _field(data, "n", where)
    summands = _field(data, "summands", where)
    return ClusterTilting.from_lists(ModelParams(d, n), summands)


def load_tilting(path: PathLike) -> ClusterTilting:
    return tilting_from_dict(_read_json(path), str(path))


def save_tilting(t: ClusterTilting, path: PathLike) -> None:
    _write_json(tilting_to_dict(t), path)


# -- matrices -----------------------------------------------------------


def matrix_to_dict(b: SkewMatrix) -> dict:
    return {"n": b.n, "rows": b.tolist()}


def matrix_from_dict(data: dict, where: str = "matrix") -> SkewMatrix:
    n = _field(data, "n", where)
    rows = _field(data, "rows", where)
    if len(rows) != n:
        raise ValidationError(f"{where}: n={n} but {len(rows)} rows")
    return SkewMatrix(tuple(tuple(r) for r in rows))


def load_matrix(path: PathLike) -> SkewMatrix:
    return matrix_from_dict(_read_json(path), str(path))


def save_matrix(b: SkewMatrix, path: PathLike) -> None:
    _write_json(matrix_to_dict(b), path)


# -- laminations --------------------------------------------------------


def lamination_to_dict(arcs) -> dict:
    return {"arcs": [[str(x) for x in a] for a in arcs]}


def lamination_from_dict(data: dict, p: ModelParams, where: str = "lamination") -> tuple[Arc, ...]:
    return tuple(arc([Fraction(str(x)) for x in a], p) for a in _field(data, "arcs", where))


def load_lamination(path: PathLike, p: ModelParams) -> tuple[Arc, ...]:
    return lamination_from_dict(_read_json(path), p, str(path))


def save_lamination(arcs, path: PathLike) -> None:
    _write_json(lamination_to_dict(arcs), path)


# -- index vectors ------------------------------------------------------


def load_index_vector(path: PathLike) -> IndexVector:
    data = _read_json(path)
    _field(data, "basis", str(path))
    _field(data, "coeffs", str(path))
    return IndexVector.from_dict(data)


def save_index_vector(v: IndexVector, path: PathLike) -> None:
    _write_json(v.to_dict(), path)


# -- fixtures -----------------------------------------------------------


def read_fixture(name: str) -> Any:
    """Load a bundled JSON fixture, or the one in ``$ANGULATA_FIXTURE_DIR``."""
    override = os.environ.get(FIXTURE_ENV)
    if override:
        return _read_json(Path(override) / name)
    text = resources.files("angulata").joinpath("data", name).read_text(encoding="utf-8")
    return json.loads(text)


def load_worked_example() -> dict:
    """The worked ``(3,3)`` example: auxiliary vectors and 25 row pairs."""
    data = read_fixture("worked_example.json")
    for key in ("slot", "basis_before", "basis_after", "index_sigma_incoming", "index_incoming", "nodes"):
        _field(data, key, "worked_example.json")
    return data

