"""JSON formats for spaces, functions and tensor elements."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .compactify import Extension, TensorElement, catalogue
from .funcalg import BoundedFunction
from .topo import FiniteSpace, space_from_json
from .valfield import FieldError, ValuedField, field_from_json

PathLike = Union[str, Path]


class FormatError(ValueError):
    pass


def read_json(path: PathLike) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None


def load_space(ref: Union[PathLike, dict], base_dir: PathLike = ".") -> FiniteSpace:
    """A space given inline as a dict or as a path (relative to ``base_dir``)."""
    if isinstance(ref, dict):
        return space_from_json(ref)
    path = Path(ref)
    if not path.is_absolute():
        path = Path(base_dir) / path
    return space_from_json(read_json(path))


def parse_field(text: Union[str, dict]) -> ValuedField:
    """Accept JSON (``{"kind": "p-adic", "p": 2}``) or ``kind[:param]`` shorthand."""
    if isinstance(text, dict):
        return field_from_json(text)
    text = text.strip()
    if text.startswith("{"):
        return field_from_json(json.loads(text))
    kind, _, param = text.partition(":")
    if kind == "p-adic":
        return field_from_json({"kind": kind, "p": param})
    if kind == "trivial-fq":
        return field_from_json({"kind": kind, "q": param})
    return field_from_json({"kind": kind})


def function_from_json(data: dict, base_dir: PathLike = ".") -> BoundedFunction:
    for key in ("space", "field", "values"):
        if key not in data:
            raise FormatError(f"function JSON is missing {key!r}")
    space = load_space(data["space"], base_dir)
    fld = parse_field(data["field"])
    return BoundedFunction.from_mapping(space, fld, data["values"])


def load_function(path: PathLike) -> BoundedFunction:
    return function_from_json(read_json(path), Path(path).parent)


def tensor_from_json(data: dict, extension: Union[str, Extension, None] = None, base_dir: PathLike = ".") -> tuple[TensorElement, FiniteSpace]:
    """``{"space": ..., "terms": [{"coefficient": c, "values": {...}}, ...]}``."""
    ext_ref = extension or data.get("extension")
    if ext_ref is None:
        raise FormatError("tensor element needs an extension")
    ext = ext_ref if isinstance(ext_ref, Extension) else catalogue(ext_ref)
    if "space" not in data:
        raise FormatError("tensor JSON is missing 'space'")
    space = load_space(data["space"], base_dir)
    terms = []
    for term in data.get("terms", []):
        try:
            coeff = ext.big(str(term["coefficient"]))
            g = BoundedFunction.from_mapping(space, ext.small, term["values"])
        except KeyError as exc:
            raise FormatError(f"tensor term is missing {exc.args[0]!r}") from None
        except FieldError as exc:
            raise FormatError(str(exc)) from None
        terms.append((coeff, g))
    return TensorElement(ext, tuple(terms)), space


def load_tensor(path: PathLike, extension: Union[str, None] = None) -> tuple[TensorElement, FiniteSpace]:
    return tensor_from_json(read_json(path), extension, Path(path).parent)
