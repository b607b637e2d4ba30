"""JSON input and output for algebras, orders, modules and reports."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .algebra import BoundQuiverAlgebra, algebra_from_json
from .errors import QuiverSerreError
from .linalg import Matrix
from .modules import Representation
from .stratification import StratOrder, order_from_json


class InputError(QuiverSerreError, ValueError):
    """Malformed input file; the message carries line and column when known."""


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, two-space indent, rationals as strings."""
    return json.dumps(obj, sort_keys=True, indent=2, default=_default)


def _default(x):
    if isinstance(x, Fraction):
        return str(x)
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (set, frozenset, tuple)):
        return list(x)
    raise TypeError(f"not serialisable: {type(x).__name__}")


def load_json(path: str) -> dict:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def algebra_from_data(data: dict) -> BoundQuiverAlgebra:
    try:
        return algebra_from_json(data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed algebra: {exc}") from None


def representation_to_json(m: Representation) -> dict:
    return m.to_json()


def representation_from_json(alg: BoundQuiverAlgebra, data: dict) -> Representation:
    """Inverse of ``Representation.to_json``; the algebra hash must match."""
    if data.get("algebra") not in (None, alg.content_hash()):
        raise InputError("module was written for a different algebra")
    dims = {str(k): int(v) for k, v in data["dims"].items()}
    action = {}
    for a in alg.quiver.arrows:
        rows = data.get("arrows", {}).get(a.name)
        nr, nc = dims.get(a.target, 0), dims.get(a.source, 0)
        if rows is None:
            action[a.name] = Matrix.zeros(nr, nc)
        else:
            action[a.name] = Matrix([[Fraction(x) for x in r] for r in rows], nr, nc)
    return Representation(alg, dims, action)


def order_from_data(alg: BoundQuiverAlgebra, data: Optional[dict]) -> StratOrder:
    if data is None:
        return StratOrder.discrete(alg.vertices)
    return order_from_json(alg.vertices, data)
