"""Canonical JSON for elements, tensors and check reports.

``dumps`` is the canonical byte form: compact separators, terms in sorted
order, trailing newline.  ``loads(dumps(x)) == x`` and
``dumps(loads(s)) == s`` for any ``s`` produced by ``dumps``.
"""
from __future__ import annotations

import json
from typing import Union

from .algebra import BarElement, HElement, element_from_dict
from .errors import ParseError
from .tensor import TensorElement, tensor_from_dict

Parsed = Union[BarElement, HElement, TensorElement]


def from_dict(data, location: str = "") -> Parsed:
    if isinstance(data, dict) and "m" in data:
        return tensor_from_dict(data, location)
    return element_from_dict(data, location)


def parse_element(text: Union[str, bytes], location: str = "") -> Parsed:
    """Parse element/tensor JSON; objects carrying ``"m"`` are tensors."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON ({exc.msg} at line {exc.lineno} column {exc.colno})", location) from None
    return from_dict(data, location)


loads = parse_element


def dumps(obj) -> str:
    return json.dumps(obj.to_dict(), separators=(",", ":")) + "\n"
