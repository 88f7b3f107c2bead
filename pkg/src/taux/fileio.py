"""Algebra description files (JSON) and bundled examples."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import List, Optional, Tuple

from .algebra import (
    DEFAULT_PATH_CAP,
    AlgebraPresentation,
    PresentationError,
    Quiver,
    Relation,
    build_algebra,
)

BUNDLED = ("gamma", "kronecker", "a1", "a2", "a3", "nakayama3")


class AlgebraFileError(ValueError):
    def __init__(self, msg: str, line: Optional[int] = None, path: Optional[str] = None):
        where = path or "<algebra>"
        if line is not None:
            where += f":{line}"
        super().__init__(f"{where}: {msg}")
        self.line = line


_COEF = re.compile(r"^\s*([0-9]+(?:/[0-9]+)?)\s*\*?\s*(.*)$")


def parse_relation(text: str) -> Relation:
    """Parse ``"b*a"`` or ``"a*b - 2 c*d"``; ``*`` composes right-to-left."""
    s = text.strip()
    if not s:
        raise ValueError("empty relation")
    terms = []
    sign = 1
    for piece in re.split(r"([+-])", s):
        if piece in ("+", "-"):
            sign *= -1 if piece == "-" else 1
            continue
        body = piece.strip()
        if not body:
            continue
        coef = Fraction(1)
        m = _COEF.match(body)
        if m and m.group(2):
            coef = Fraction(m.group(1))
            body = m.group(2)
        names = [n.strip() for n in body.split("*")]
        if not all(names) or any(not re.fullmatch(r"[^\s*+\-/]+", n) for n in names):
            raise ValueError(f"cannot parse term {body!r}")
        terms.append((sign * coef, tuple(names)))
        sign = 1
    if not terms:
        raise ValueError("relation has no terms")
    return Relation.build(terms)


def _line_of(text: str, needle: str) -> Optional[int]:
    idx = text.find(json.dumps(needle, ensure_ascii=False))
    if idx < 0:
        idx = text.find(needle)
    return None if idx < 0 else text.count("\n", 0, idx) + 1


def loads_algebra(text: str, path: Optional[str] = None, path_cap: int = DEFAULT_PATH_CAP) -> Tuple[str, AlgebraPresentation]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(exc.msg, exc.lineno, path) from None
    if not isinstance(data, dict):
        raise AlgebraFileError("top level must be an object", 1, path)
    try:
        vertices = [str(v) for v in data["vertices"]]
        arrows = [(str(a["name"]), str(a["from"]), str(a["to"])) for a in data.get("arrows", [])]
    except (KeyError, TypeError) as exc:
        raise AlgebraFileError(f"missing or malformed field {exc}", None, path) from None
    try:
        q = Quiver.build(vertices, arrows)
    except PresentationError as exc:
        raise AlgebraFileError(str(exc), _line_of(text, "arrows"), path) from None
    rels: List[Relation] = []
    for r in data.get("relations", []):
        try:
            rels.append(parse_relation(str(r)))
        except ValueError as exc:
            raise AlgebraFileError(f"relation {r!r}: {exc}", _line_of(text, str(r)), path) from None
    try:
        alg = build_algebra(q, rels, path_cap)
    except PresentationError as exc:
        raise AlgebraFileError(str(exc), _line_of(text, "relations"), path) from None
    return str(data.get("name", Path(path).stem if path else "algebra")), alg


def load_algebra(path, path_cap: int = DEFAULT_PATH_CAP) -> Tuple[str, AlgebraPresentation]:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise AlgebraFileError(str(exc), None, str(p)) from None
    return loads_algebra(text, str(p), path_cap)


def bundled_text(name: str) -> str:
    return resources.files("taux").joinpath("data").joinpath(f"{name}.json").read_text(encoding="utf-8")


def bundled(name: str) -> AlgebraPresentation:
    if name not in BUNDLED:
        raise KeyError(f"no bundled algebra {name!r}; choose from {', '.join(BUNDLED)}")
    return loads_algebra(bundled_text(name), f"{name}.json")[1]
