"""Named stores of sets, maps, categories and markings, and their JSON documents.

A workspace document is ``{"format": 1, "sets": {...}, "maps": {...},
"categories": {...}, "markings": {...}}``; every section is optional.  A bare
set document (one with ``"cells"`` at top level) loads as a single set named
after its file.
"""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Dict, List, Optional

from .homotopy.categories import CategoryError, FiniteCategory, category_document
from .homotopy.marking import MarkedSimplicialSet
from .kernel.maps import SimplicialMap
from .kernel.serialize import FORMAT, SchemaError, cell_names, decode_map, decode_set, dumps, encode_map, encode_set
from .kernel.sset import FiniteSimplicialSet, Simplex

SECTIONS = ("sets", "maps", "categories", "markings")


class UsageError(ValueError):
    """A name or argument the command cannot resolve."""


def decode_category(doc: dict, name: str = "") -> FiniteCategory:
    """Inverse of ``category_document``: objects and arrows come back as their names."""
    try:
        objects = list(doc["objects"])
        arrows = {a: (objects[s], objects[t]) for a, s, t in doc["arrows"]}
        names = [a for a, _, _ in doc["arrows"]]
        identities = {x: names[i] for x, i in zip(objects, doc["identities"])}
        compose = {(names[g], names[f]): names[gf] for g, f, gf in doc["composition"]}
    except (KeyError, IndexError, TypeError, ValueError) as e:
        raise SchemaError(f"category {name!r}: malformed ({e})") from None
    if len(names) != len(set(names)):
        raise SchemaError(f"category {name!r}: repeated arrow name")
    try:
        return FiniteCategory(objects, arrows, identities, compose, name=name)
    except CategoryError as e:
        raise SchemaError(f"category {name!r}: {e}") from e


def encode_marking(M: MarkedSimplicialSet, set_name: str) -> dict:
    names = cell_names(M.underlying)
    return {"set": set_name, "marked": sorted([names[e.cell], list(e.degen)] for e in M.marked)}


def decode_marking(doc: dict, sets: Dict[str, FiniteSimplicialSet], name: str = "") -> MarkedSimplicialSet:
    X = sets.get(doc.get("set"))
    if X is None:
        raise SchemaError(f"marking {name!r}: unknown set {doc.get('set')!r}")
    index = {n: i for i, n in enumerate(cell_names(X))}
    marked = set()
    for entry in doc.get("marked", []):
        base, epi = entry
        if base not in index:
            raise SchemaError(f"marking {name!r}: unknown cell {base!r}")
        marked.add(Simplex(index[base], tuple(int(e) for e in epi)))
    for v in X.cells(0):
        marked.add(Simplex(v, (0, 0)))
    try:
        return MarkedSimplicialSet(X, frozenset(marked))
    except ValueError as e:
        raise SchemaError(f"marking {name!r}: {e}") from e


class Workspace:
    def __init__(self):
        self.sets: Dict[str, FiniteSimplicialSet] = {}
        self.maps: Dict[str, SimplicialMap] = {}
        self.categories: Dict[str, FiniteCategory] = {}
        self.markings: Dict[str, MarkedSimplicialSet] = {}
        self.docs: Dict[str, Dict[str, dict]] = {s: {} for s in SECTIONS}
        self.used: Dict[str, List[str]] = {s: [] for s in SECTIONS}

    # loading

    def load_document(self, doc: dict, default_name: str = "input"):
        if not isinstance(doc, dict):
            raise SchemaError("document must be a JSON object")
        if doc.get("format", FORMAT) != FORMAT:
            raise SchemaError(f"unsupported format {doc.get('format')!r}")
        if "cells" in doc:
            doc = {"sets": {default_name: {k: v for k, v in doc.items() if k != "format"}}}
        elif not any(s in doc for s in SECTIONS):
            if "command" in doc:
                doc = doc.get("inputs", {})
            elif set(doc) - {"format"}:
                raise SchemaError("document has neither a 'sets' section nor a top-level 'cells' list")
        for name, d in doc.get("sets", {}).items():
            self._claim("sets", name)
            self.sets[name] = decode_set(d, name)
            self.docs["sets"][name] = d
        for name, d in doc.get("maps", {}).items():
            self._claim("maps", name)
            self.maps[name] = decode_map(d, self.sets, name)
            self.docs["maps"][name] = d
        for name, d in doc.get("categories", {}).items():
            self._claim("categories", name)
            self.categories[name] = decode_category(d, name)
            self.docs["categories"][name] = d
        for name, d in doc.get("markings", {}).items():
            self._claim("markings", name)
            self.markings[name] = decode_marking(d, self.sets, name)
            self.docs["markings"][name] = d

    def load_file(self, path: str):
        p = Path(path)
        try:
            doc = json.loads(p.read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise UsageError(f"no such file: {path}") from None
        except json.JSONDecodeError as e:
            raise SchemaError(f"{path}: not JSON ({e})") from None
        self.load_document(doc, p.stem)

    def _claim(self, section: str, name: str):
        if name in getattr(self, section):
            raise SchemaError(f"{section[:-1]} {name!r} defined twice")

    # lookup

    def _get(self, section: str, name: Optional[str]):
        store = getattr(self, section)
        if name is None:
            if len(store) != 1:
                kind = section[:-1]
                raise UsageError(f"name a {kind}: {len(store)} available ({', '.join(sorted(store)) or 'none'})")
            name = next(iter(store))
        if name not in store:
            raise UsageError(f"unknown {section[:-1]} {name!r}")
        self._use(section, name)
        return store[name]

    def _use(self, section: str, name: str):
        if name in self.used[section]:
            return
        self.used[section].append(name)
        doc = self.docs[section].get(name)
        if section == "maps" and doc is not None:
            self._use("sets", doc["source"])
            self._use("sets", doc["target"])
        if section == "markings" and doc is not None:
            self._use("sets", doc["set"])

    def set(self, name=None) -> FiniteSimplicialSet:
        return self._get("sets", name)

    def map(self, name=None) -> SimplicialMap:
        return self._get("maps", name)

    def category(self, name=None) -> FiniteCategory:
        return self._get("categories", name)

    def marking(self, name=None) -> MarkedSimplicialSet:
        return self._get("markings", name)

    def used_document(self) -> dict:
        """The loaded entries this run actually consulted, as a workspace document."""
        out = {}
        for s in SECTIONS:
            names = sorted(self.used[s])
            if names:
                out[s] = {n: self.docs[s][n] for n in names if n in self.docs[s]}
        return out


class Emitter:
    """Builds an output workspace section by section, naming sets as it goes."""

    def __init__(self):
        self.doc: Dict[str, dict] = {}
        self._names: Dict[int, str] = {}

    def add_set(self, name: str, X: FiniteSimplicialSet) -> str:
        known = self._names.get(id(X))
        if known is not None:
            return known
        base, k = name, 1
        while name in self.doc.get("sets", {}):
            k += 1
            name = f"{base}#{k}"
        self.doc.setdefault("sets", {})[name] = encode_set(X)
        self._names[id(X)] = name
        return name

    def add_map(self, name: str, f: SimplicialMap, source: str = None, target: str = None) -> str:
        s = self.add_set(source or f.source.name or f"{name}.source", f.source)
        t = self.add_set(target or f.target.name or f"{name}.target", f.target)
        self.doc.setdefault("maps", {})[name] = encode_map(f, s, t)
        return name

    def add_category(self, name: str, C: FiniteCategory):
        self.doc.setdefault("categories", {})[name] = category_document(C)

    def add_marking(self, name: str, M: MarkedSimplicialSet, set_name: str = None):
        s = self.add_set(set_name or M.underlying.name or f"{name}.set", M.underlying)
        self.doc.setdefault("markings", {})[name] = encode_marking(M, s)


def write_atomic(path: str, text: str):
    """Write the whole text or nothing."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=str(target.parent), prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def document_text(doc: dict) -> str:
    return dumps(doc)
