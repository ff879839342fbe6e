"""JSON file formats for lattices and maps.

Lattice files carry {"name", "n", "covers"}; covers are Hasse edges and
the transitive closure is rebuilt on load.  Map files carry
{"dom", "cod", "values"} where dom and cod are lattice file paths,
resolved relative to the directory containing the map file.
"""

from __future__ import annotations

import json
import os

from .errors import ParseError
from .lattice import Lattice, build_lattice, build_poset
from .maps import LatMap, latmap


def dumps(doc: dict) -> str:
    """Canonical rendering: two-space indent and a trailing newline."""
    return json.dumps(doc, indent=2) + "\n"


def lattice_to_doc(L: Lattice) -> dict:
    name = L.name if L.name else f"lattice{L.n}"
    return {
        "name": name,
        "n": L.n,
        "covers": [list(c) for c in sorted(L.poset.covers)],
    }


def _expect(doc: dict, field: str, kinds, where: str):
    if field not in doc:
        raise ParseError(f"{where} is missing field {field!r}")
    value = doc[field]
    if not isinstance(value, kinds):
        raise ParseError(f"{where} field {field!r} has the wrong type")
    return value


def lattice_from_doc(doc) -> Lattice:
    if not isinstance(doc, dict):
        raise ParseError("lattice document must be a JSON object")
    name = _expect(doc, "name", str, "lattice document")
    n = _expect(doc, "n", int, "lattice document")
    covers = _expect(doc, "covers", list, "lattice document")
    pairs = []
    for item in covers:
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(v, int) for v in item)):
            raise ParseError("covers entries must be pairs of integers")
        pairs.append((item[0], item[1]))
    return build_lattice(build_poset(n, pairs), name=name)


def map_to_doc(f: LatMap, dom_ref: str, cod_ref: str) -> dict:
    return {"dom": dom_ref, "cod": cod_ref, "values": f.values.tolist()}


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: not valid JSON ({e})") from e


def load_lattice(path: str) -> Lattice:
    return lattice_from_doc(_load_json(path))


def save_lattice(L: Lattice, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(lattice_to_doc(L)))


def _resolve(ref: str, base_dir: str) -> str:
    return ref if os.path.isabs(ref) else os.path.join(base_dir, ref)


def map_from_doc(doc, base_dir: str = ".") -> LatMap:
    if not isinstance(doc, dict):
        raise ParseError("map document must be a JSON object")
    dom_ref = _expect(doc, "dom", str, "map document")
    cod_ref = _expect(doc, "cod", str, "map document")
    values = _expect(doc, "values", list, "map document")
    if not all(isinstance(v, int) for v in values):
        raise ParseError("map values must be integers")
    dom = load_lattice(_resolve(dom_ref, base_dir))
    if os.path.abspath(_resolve(cod_ref, base_dir)) == \
            os.path.abspath(_resolve(dom_ref, base_dir)):
        cod = dom
    else:
        cod = load_lattice(_resolve(cod_ref, base_dir))
    return latmap(dom, cod, values)


def load_map(path: str) -> LatMap:
    return map_from_doc(_load_json(path), os.path.dirname(os.path.abspath(path)))


def save_map(f: LatMap, dom_ref: str, cod_ref: str, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(map_to_doc(f, dom_ref, cod_ref)))
