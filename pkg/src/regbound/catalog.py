"""Named varieties and the JSON spec loader."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from .errors import ParseError, UnknownFamily, ValidationError
from .hilbert import HilbertPoly, hp_from_values
from .projection import VarietySpec, curve, scroll, surface


def _eg(spec: VarietySpec) -> int:
    return spec.d + 1 - (spec.r - spec.n)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    build: Callable[..., VarietySpec]
    defaults: dict[str, int] = field(default_factory=dict)
    expected: Callable[[VarietySpec], int | None] | None = None
    note: str = ""

    def make(self, **params: int) -> VarietySpec:
        kw = {**self.defaults, **params}
        try:
            return self.build(**kw)
        except TypeError as exc:
            raise ValidationError(f"bad parameters {sorted(kw)} for {self.name}: {exc}") from exc

    def expected_value(self, spec: VarietySpec) -> int | None:
        return self.expected(spec) if self.expected else None


def _rational_scroll_expected(spec: VarietySpec) -> int | None:
    return _eg(spec) if spec.family is not None and spec.family.g == 0 else None


CATALOG: dict[str, CatalogEntry] = {
    e.name: e
    for e in [
        CatalogEntry(
            "rational-normal-curve",
            lambda r: curve(r, 0, r, name=f"rational-normal-curve(r={r})"),
            {"r": 4}, _eg, "rational scroll: d+1-codim is attained"),
        CatalogEntry(
            "twisted-cubic", lambda: curve(3, 0, 3, name="twisted-cubic"),
            expected=lambda s: 2, note="cut out by quadrics, reg 2"),
        CatalogEntry(
            "elliptic-quartic", lambda: curve(4, 1, 3, name="elliptic-quartic"),
            expected=lambda s: 3, note="(2,2) complete intersection, reg 3"),
        CatalogEntry(
            "veronese-surface", lambda: surface(4, 0, 1, 5, name="veronese-surface"),
            expected=lambda s: 2, note="cut out by quadrics, reg 2"),
        CatalogEntry(
            "rational-normal-scroll",
            lambda n, r: scroll(n, r - n + 1, 0, r, name=f"rational-normal-scroll(n={n},r={r})"),
            {"n": 2, "r": 5}, _eg, "rational scroll: d+1-codim is attained"),
        CatalogEntry("curve", lambda d, g, r: curve(d, g, r)),
        CatalogEntry("surface", lambda d, pi, chi, r: surface(d, pi, chi, r)),
        CatalogEntry("scroll", lambda n, d, g, r: scroll(n, d, g, r),
                     expected=_rational_scroll_expected,
                     note="rational scrolls (g=0) attain d+1-codim"),
    ]
}

#: instances of the parametric entries used by ``catalog`` and ``verify``
DEFAULT_INSTANCES: list[tuple[str, dict[str, int]]] = [
    ("rational-normal-curve", {"r": 3}),
    ("rational-normal-curve", {"r": 4}),
    ("rational-normal-curve", {"r": 6}),
    ("twisted-cubic", {}),
    ("elliptic-quartic", {}),
    ("veronese-surface", {}),
    ("rational-normal-scroll", {"n": 2, "r": 4}),
    ("rational-normal-scroll", {"n": 2, "r": 5}),
    ("rational-normal-scroll", {"n": 3, "r": 7}),
    ("curve", {"d": 6, "g": 2, "r": 4}),
    ("surface", {"d": 5, "pi": 1, "chi": 1, "r": 5}),
    ("scroll", {"n": 2, "d": 6, "g": 1, "r": 5}),
]


def catalog_instances() -> list[tuple[CatalogEntry, VarietySpec]]:
    return [(CATALOG[name], CATALOG[name].make(**params)) for name, params in DEFAULT_INSTANCES]


def from_catalog(text: str) -> VarietySpec:
    """Parse ``name`` or ``name:key=value,key=value``."""
    name, _, rest = text.partition(":")
    entry = CATALOG.get(name.strip())
    if entry is None:
        raise ValidationError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG)}", "spec")
    params: dict[str, int] = {}
    for item in filter(None, (p.strip() for p in rest.split(","))):
        key, eq, value = item.partition("=")
        if not eq:
            raise ParseError(f"expected key=value, got {item!r}", "spec")
        try:
            params[key.strip()] = int(value)
        except ValueError as exc:
            raise ParseError(f"parameter {key.strip()!r} is not an integer", "spec") from exc
    return entry.make(**params)


_FAMILY_KEYS = {
    "curve": ("d", "g", "r"),
    "surface": ("d", "pi", "chi", "r"),
    "scroll": ("n", "d", "g", "r"),
}


def _int_field(doc: dict, key: str) -> int:
    if key not in doc:
        raise ValidationError("missing required field", key)
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"expected an integer, got {value!r}", key)
    return value


def _int_list(value: Any, key: str) -> list:
    if not isinstance(value, list):
        raise ValidationError("expected a list", key)
    return value


def spec_from_document(doc: Any) -> VarietySpec:
    if not isinstance(doc, dict):
        raise ValidationError("spec document must be a JSON object")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ValidationError("expected a string", "name")

    if "family" in doc:
        family = doc["family"]
        if family not in _FAMILY_KEYS:
            raise UnknownFamily(f"unknown family {family!r}", "family")
        keys = _FAMILY_KEYS[family]
        extra = set(doc) - set(keys) - {"family", "name"}
        if extra:
            raise ValidationError(f"unexpected fields {sorted(extra)}", "family")
        params = {k: _int_field(doc, k) for k in keys}
        build = {"curve": curve, "surface": surface, "scroll": scroll}[family]
        return build(**params, name=name)

    n = _int_field(doc, "dim")
    r = _int_field(doc, "ambient")
    extra = set(doc) - {"dim", "ambient", "coeffs", "values", "name"}
    if extra:
        raise ValidationError(f"unexpected fields {sorted(extra)}")
    if ("coeffs" in doc) == ("values" in doc):
        raise ValidationError("give exactly one of 'coeffs' or 'values'")
    if "coeffs" in doc:
        coeffs = _int_list(doc["coeffs"], "coeffs")
        for i, c in enumerate(coeffs):
            if isinstance(c, bool) or not isinstance(c, int):
                raise ValidationError(f"expected an integer, got {c!r}", f"coeffs[{i}]")
        hp = HilbertPoly(n, tuple(coeffs))
    else:
        points = []
        for i, pt in enumerate(_int_list(doc["values"], "values")):
            if (not isinstance(pt, list) or len(pt) != 2
                    or not all(isinstance(x, int) and not isinstance(x, bool) for x in pt)):
                raise ValidationError(f"expected an integer pair [z, value], got {pt!r}",
                                      f"values[{i}]")
            points.append((pt[0], pt[1]))
        hp = hp_from_values(n, points)
    return VarietySpec(name or f"hilbert(n={n},r={r},c={list(hp.coeffs)})", n, r, hp)


def load_spec(source: str) -> VarietySpec:
    """Load a spec from inline JSON, a JSON file, or a catalog name."""
    text = source.strip()
    if not text.startswith("{"):
        path = Path(text)
        if text.endswith(".json") or path.is_file():
            try:
                text = path.read_text()
            except OSError as exc:
                raise ParseError(f"cannot read {source}: {exc}", "spec") from exc
        else:
            return from_catalog(text)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}", "spec") from exc
    return spec_from_document(doc)
