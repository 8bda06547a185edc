"""JSON documents for oriented matroids and arrangements.

Oriented matroid::

    {"ground_size": 4,
     "circuits": [{"positive": [1], "negative": [2, 3]}, ...]}

one circuit per ``±X`` pair (listing both is harmless).

Arrangement::

    {"dim": 2,
     "hyperplanes": [{"normal": [0, 1], "offset": "0"}, ...]}

Rationals are integers or strings ``"p/q"``; floats are rejected.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from .arrangement.core import Arrangement, Hyperplane
from .om import MalformedInputError, OrientedMatroid, SignedSubset, validate_om_axioms


class DocumentError(ValueError):
    """Malformed document; the message names the offending field."""


class AxiomViolation(ValueError):
    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where}: expected an integer, got {value!r}")
    return value


def _rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise DocumentError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")
    try:
        return Fraction(value)
    except ZeroDivisionError:
        raise DocumentError(f"{where}: zero denominator in {value!r}") from None
    except ValueError:
        raise DocumentError(f"{where}: not a rational: {value!r}") from None


def _index_list(value, where: str, m: int) -> list[int]:
    if not isinstance(value, list):
        raise DocumentError(f"{where}: expected a list of element indices")
    out = []
    for j, v in enumerate(value):
        i = _int(v, f"{where}[{j}]")
        if not 1 <= i <= m:
            raise DocumentError(f"{where}[{j}]: element {i} outside 1..{m}")
        out.append(i)
    return out


def om_from_document(doc) -> OrientedMatroid:
    if not isinstance(doc, dict):
        raise DocumentError("top level: expected an object")
    if "ground_size" not in doc:
        raise DocumentError("missing field 'ground_size'")
    m = _int(doc["ground_size"], "ground_size")
    if m < 0:
        raise DocumentError("ground_size: must be nonnegative")
    raw = doc.get("circuits", [])
    if not isinstance(raw, list):
        raise DocumentError("circuits: expected a list")
    reps = []
    for j, c in enumerate(raw):
        where = f"circuits[{j}]"
        if not isinstance(c, dict):
            raise DocumentError(f"{where}: expected an object with 'positive' and 'negative'")
        pos = _index_list(c.get("positive", []), f"{where}.positive", m)
        neg = _index_list(c.get("negative", []), f"{where}.negative", m)
        try:
            reps.append(SignedSubset.of(pos, neg))
        except MalformedInputError as exc:
            raise DocumentError(f"{where}: {exc}") from None
    om = OrientedMatroid.from_representatives(m, reps)
    report = validate_om_axioms(om.circuits, m)
    if not report:
        raise AxiomViolation(report)
    return om


def parse_om(text: str) -> OrientedMatroid:
    return om_from_document(_load(text))


def om_to_document(om: OrientedMatroid) -> dict:
    if om.ground != frozenset(range(1, om.size + 1)):
        raise ValueError("only oriented matroids on 1..m can be serialized")
    return {
        "ground_size": om.size,
        "circuits": [
            {"positive": sorted(x.positive), "negative": sorted(x.negative)}
            for x in om.representatives()
        ],
    }


def serialize_om(om: OrientedMatroid) -> str:
    return json.dumps(om_to_document(om), indent=2, ensure_ascii=False) + "\n"


def arrangement_from_document(doc) -> Arrangement:
    if not isinstance(doc, dict):
        raise DocumentError("top level: expected an object")
    if "dim" not in doc:
        raise DocumentError("missing field 'dim'")
    n = _int(doc["dim"], "dim")
    if n < 1:
        raise DocumentError("dim: must be positive")
    raw = doc.get("hyperplanes", [])
    if not isinstance(raw, list):
        raise DocumentError("hyperplanes: expected a list")
    hs = []
    for j, h in enumerate(raw):
        where = f"hyperplanes[{j}]"
        if not isinstance(h, dict) or "normal" not in h:
            raise DocumentError(f"{where}: expected an object with 'normal' and 'offset'")
        normal = h["normal"]
        if not isinstance(normal, list) or len(normal) != n:
            raise DocumentError(f"{where}.normal: expected a list of {n} rationals")
        vec = tuple(_rational(v, f"{where}.normal[{i}]") for i, v in enumerate(normal))
        offset = _rational(h.get("offset", 0), f"{where}.offset")
        if not any(vec):
            raise DocumentError(f"{where}.normal: zero normal vector")
        hs.append(Hyperplane(vec, offset))
    return Arrangement(n, tuple(hs))


def parse_arrangement(text: str) -> Arrangement:
    return arrangement_from_document(_load(text))


def fraction_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _json_rational(q: Fraction):
    return q.numerator if q.denominator == 1 else fraction_str(q)


def arrangement_to_document(arr: Arrangement) -> dict:
    return {
        "dim": arr.dim,
        "hyperplanes": [
            {"normal": [_json_rational(v) for v in h.normal], "offset": _json_rational(h.offset)}
            for h in arr.hyperplanes
        ],
    }


def serialize_arrangement(arr: Arrangement) -> str:
    doc = arrangement_to_document(arr)
    rows = ",\n".join("    " + json.dumps(h) for h in doc["hyperplanes"])
    return f'{{\n  "dim": {doc["dim"]},\n  "hyperplanes": [\n{rows}\n  ]\n}}\n'


def fixture_text(name: str) -> str:
    """Contents of a shipped fixture such as ``example21.json``."""
    return resources.files("nbc_bijections.data").joinpath(name).read_text(encoding="utf-8")
