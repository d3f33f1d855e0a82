"""JSON encodings for elements, directions, chains and reports."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import IO, Any, Union

from .algebra import SupportPoint, WeylElement
from .chains import Chain
from .valuation import CornerData, Direction

_FRACTION = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class FormatError(ValueError):
    """Input that does not follow one of the JSON schemas."""


def fraction_to_text(c: Fraction) -> str:
    return str(Fraction(c))


def parse_fraction(text: Any) -> Fraction:
    """Strict parser: 'p' or 'p/q' with q > 1 and gcd(p, q) = 1."""
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise FormatError(f"coefficient must be a string, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    m = _FRACTION.match(text.strip())
    if not m:
        raise FormatError(f"malformed fraction {text!r}")
    num, den = int(m.group(1)), m.group(2)
    if den is None:
        return Fraction(num)
    den = int(den)
    if den == 0:
        raise FormatError(f"zero denominator in {text!r}")
    value = Fraction(num, den)
    if str(value) != text.strip():
        raise FormatError(f"fraction {text!r} is not in reduced form")
    return value


def _int(obj, key):
    value = obj.get(key) if isinstance(obj, dict) else None
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"field {key!r} must be an integer")
    return value


def element_to_obj(P: WeylElement) -> dict:
    terms = sorted(P.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]), reverse=True)
    return {"level": P.level, "commutative": P.commutative,
            "terms": [{"xnum": xn, "y": y, "c": fraction_to_text(c)} for (xn, y), c in terms]}


def element_from_obj(obj: Any) -> WeylElement:
    if not isinstance(obj, dict):
        raise FormatError("element must be a JSON object")
    level = _int(obj, "level")
    if level <= 0:
        raise FormatError("level must be positive")
    flag = obj.get("commutative", False)
    if not isinstance(flag, bool):
        raise FormatError("'commutative' must be a boolean")
    raw = obj.get("terms")
    if not isinstance(raw, list):
        raise FormatError("'terms' must be a list")
    terms = {}
    for t in raw:
        key = (_int(t, "xnum"), _int(t, "y"))
        if key[1] < 0:
            raise FormatError("negative power of Y")
        if key in terms:
            raise FormatError(f"duplicate term {key}")
        c = parse_fraction(t.get("c"))
        if c == 0:
            raise FormatError("zero coefficient present")
        terms[key] = c
    return WeylElement(level, terms, flag)


def dumps_element(P: WeylElement) -> str:
    return json.dumps(element_to_obj(P), separators=(", ", ": ")) + "\n"


def loads_element(text: str) -> WeylElement:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc.msg}") from None
    return element_from_obj(obj)


def load_element(source: Union[str, IO[str]]) -> WeylElement:
    if hasattr(source, "read"):
        return loads_element(source.read())
    with open(source) as fh:
        return loads_element(fh.read())


def save_element(P: WeylElement, target: Union[str, IO[str]]) -> None:
    text = dumps_element(P)
    if hasattr(target, "write"):
        target.write(text)
    else:
        with open(target, "w") as fh:
            fh.write(text)


def point_to_obj(p: SupportPoint) -> list:
    return [fraction_to_text(p.x), p.y]


def direction_to_obj(d: Direction) -> list:
    return [d.rho, d.sigma]


def direction_from_obj(obj: Any) -> Direction:
    if (not isinstance(obj, list) or len(obj) != 2
            or any(isinstance(v, bool) or not isinstance(v, int) for v in obj)):
        raise FormatError("direction must be [rho, sigma]")
    try:
        return Direction(*obj)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def corners_to_obj(c: CornerData) -> dict:
    return {"st": None if c.st is None else point_to_obj(c.st),
            "en": None if c.en is None else point_to_obj(c.en),
            "w": point_to_obj(c.w), "ovw": point_to_obj(c.ovw),
            "lc": fraction_to_text(c.lc), "ovlc": fraction_to_text(c.ovlc)}


def chain_from_obj(obj: Any) -> Chain:
    if not isinstance(obj, dict) or not isinstance(obj.get("nodes"), list) or not obj["nodes"]:
        raise FormatError("chain must be an object with a non-empty 'nodes' list")
    for node in obj["nodes"]:
        for key in ("A_xnum", "A_y", "rho", "sigma", "level"):
            _int(node, key)
        if node["level"] <= 0:
            raise FormatError("node level must be positive")
    for key in ("m", "n"):
        if obj.get(key) is not None:
            _int(obj, key)
    try:
        return Chain.from_json(obj)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def load_chain(path: str) -> Chain:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"malformed JSON: {exc.msg}") from None
    return chain_from_obj(obj)


def save_chain(chain: Chain, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(chain.to_json(), fh, indent=1)
        fh.write("\n")
