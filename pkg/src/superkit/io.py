"""Field and alpha files: exact rational strings only, errors carry a location.

Field file::

    {"fields": [{"name": "f0", "domain": "laurent",
                 "components": {"psi1": {"terms": [[1, 0, "1", "0"]]}}}]}

``domain`` is ``laurent`` (terms ``[m, n, re, im]`` for y^m ybar^n on chart V)
or ``circle`` (terms ``[k, re, im]`` for exp(i k phi)).  Missing components
are zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .jets import FIELDS
from .lagrangian import FieldComponents
from .laurent import CircleFn, LaurentFn
from .scalars import ComplexScalar

__all__ = ["InputError", "FieldRecord", "load_json", "load_fields", "load_alpha", "field_to_json"]


class InputError(ValueError):
    """Malformed input; ``location`` is ``file:line:col`` or a JSON path."""

    def __init__(self, message, location):
        super().__init__(f"{location}: {message}")
        self.location = location


@dataclass(frozen=True)
class FieldRecord:
    name: str
    domain: str
    components: object  # FieldComponents (laurent) or dict of CircleFn (circle)


def load_json(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(exc.strerror or "cannot read", str(path)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(exc.msg, f"{path}:{exc.lineno}:{exc.colno}") from exc


def _rational(value, where):
    # floats would silently lose exactness
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InputError(f"expected an exact rational string, got {value!r}", where)
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational: {value!r}", where) from exc


def _int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"expected an integer exponent, got {value!r}", where)
    return value


def _terms(data, where, width):
    if not isinstance(data, dict) or not isinstance(data.get("terms"), list):
        raise InputError("expected an object with a 'terms' list", where)
    rows = []
    for i, row in enumerate(data["terms"]):
        at = f"{where}.terms[{i}]"
        if not isinstance(row, list) or len(row) != width:
            raise InputError(f"expected a list of {width} entries", at)
        exps = [_int(v, f"{at}[{j}]") for j, v in enumerate(row[: width - 2])]
        re_, im_ = (_rational(v, f"{at}[{width - 2 + j}]") for j, v in enumerate(row[width - 2:]))
        rows.append((tuple(exps), ComplexScalar(re_, im_)))
    return rows


def _laurent(data, where) -> LaurentFn:
    out = LaurentFn()
    for (m, n), c in _terms(data, where, 4):
        out = out + LaurentFn.monomial(m, n, c)
    return out


def _circle(data, where) -> CircleFn:
    out = CircleFn()
    for (k,), c in _terms(data, where, 3):
        out = out + CircleFn.exp(k, c)
    return out


def _record(data, where) -> FieldRecord:
    if not isinstance(data, dict):
        raise InputError("expected a field object", where)
    domain = data.get("domain", "laurent")
    if domain not in ("laurent", "circle"):
        raise InputError(f"domain must be 'laurent' or 'circle', got {domain!r}", f"{where}.domain")
    comps = data.get("components", {})
    if not isinstance(comps, dict):
        raise InputError("expected an object", f"{where}.components")
    unknown = sorted(set(comps) - set(FIELDS))
    if unknown:
        raise InputError(f"unknown components {unknown}", f"{where}.components")
    if domain == "laurent":
        get = lambda f: _laurent(comps[f], f"{where}.components.{f}") if f in comps else LaurentFn()  # noqa: E731
        value = FieldComponents(get("phi"), get("psi1"), get("psi2"), get("F"))
    else:
        value = {f: _circle(comps[f], f"{where}.components.{f}") if f in comps else CircleFn() for f in FIELDS}
    return FieldRecord(str(data.get("name", where)), domain, value)


def load_fields(path) -> list:
    data = load_json(path)
    if not isinstance(data, dict) or not isinstance(data.get("fields"), list):
        raise InputError("expected an object with a 'fields' list", str(path))
    return [_record(f, f"{path}:fields[{i}]") for i, f in enumerate(data["fields"])]


def load_alpha(path) -> LaurentFn:
    """Odd-shift coefficient alpha(x) of the U -> V transition, Laurent terms in x."""
    return _laurent(load_json(path), str(path))


def field_to_json(record: FieldRecord) -> dict:
    if record.domain == "laurent":
        comps = record.components.to_json()
    else:
        comps = {f: record.components[f].to_json() for f in FIELDS}
    return {"name": record.name, "domain": record.domain, "components": comps}
