"""JSON encoding of simplicial sets and maps.

A set is encoded as ``{"cells": [[names in dimension 0], ...], "faces": {name:
[[base, epi], ...]}}``; a map as ``{"source", "target", "images": {name: [base,
epi]}}``.  Output is canonical: sorted keys, no floats, fixed indentation.
"""
from __future__ import annotations

import json
from typing import Dict, List

from .maps import NaturalityError, SimplicialMap
from .sset import FiniteSimplicialSet, Simplex, SimplicialIdentityError, TruncatedSSet, render_label

FORMAT = 1


class SchemaError(ValueError):
    pass


def cell_names(X: FiniteSimplicialSet) -> List[str]:
    names = [lab if isinstance(lab, str) else render_label(lab) for lab in X.labels]
    if len(set(names)) != len(names):
        names = [f"c{i}" for i in range(len(names))]
    return names


def encode_set(X: FiniteSimplicialSet) -> Dict:
    names = cell_names(X)
    doc = {
        "cells": [[names[c] for c in X.cells(n)] for n in range(X.dimension + 1)],
        "faces": {names[c]: [[names[f.cell], list(f.degen)] for f in X.faces[c]]
                  for c in range(len(X)) if X.dims[c] > 0},
    }
    if X.level is not None:
        doc["truncation"] = {"level": X.level, "complete": bool(getattr(X, "complete", False))}
    return doc


def decode_set(doc: Dict, name: str = "") -> FiniteSimplicialSet:
    if not isinstance(doc, dict) or "cells" not in doc:
        raise SchemaError(f"set {name!r}: missing 'cells'")
    cells = doc["cells"]
    faces_doc = doc.get("faces", {})
    labels: List[str] = []
    dim_of: Dict[str, int] = {}
    for n, level in enumerate(cells):
        if not isinstance(level, list):
            raise SchemaError(f"set {name!r}: cells of dimension {n} must be a list")
        for c in level:
            if not isinstance(c, str):
                raise SchemaError(f"set {name!r}: cell name {c!r} is not a string")
            if c in dim_of:
                raise SchemaError(f"set {name!r}: cell {c!r} listed twice")
            dim_of[c] = n
            labels.append(c)
    index = {c: i for i, c in enumerate(labels)}
    faces = []
    for c in labels:
        n = dim_of[c]
        if n == 0:
            if faces_doc.get(c):
                raise SchemaError(f"set {name!r}: vertex {c!r} has faces")
            faces.append(())
            continue
        fs = faces_doc.get(c)
        if not isinstance(fs, list) or len(fs) != n + 1:
            raise SchemaError(f"set {name!r}: cell {c!r} needs {n + 1} faces")
        row = []
        for j, entry in enumerate(fs):
            try:
                base, epi = entry
                epi = tuple(int(e) for e in epi)
            except (TypeError, ValueError):
                raise SchemaError(f"set {name!r}: face {j} of cell {c!r} is malformed") from None
            if base not in index:
                raise SchemaError(f"set {name!r}: face {j} of cell {c!r} names unknown cell {base!r}")
            if len(epi) != n or dim_of[base] >= n:
                raise SchemaError(f"set {name!r}: face {j} of cell {c!r} has the wrong dimension")
            row.append(Simplex(index[base], epi))
        faces.append(tuple(row))
    trunc = doc.get("truncation")
    if trunc is None:
        X = FiniteSimplicialSet(labels, faces, name)
    else:
        X = TruncatedSSet(labels, faces, int(trunc["level"]), bool(trunc.get("complete", False)), name)
    try:
        X.validate()
    except SimplicialIdentityError as e:
        raise SchemaError(f"set {name!r}: {e}") from e
    return X


def encode_map(f: SimplicialMap, source: str, target: str) -> Dict:
    sn, tn = cell_names(f.source), cell_names(f.target)
    return {
        "source": source,
        "target": target,
        "images": {sn[c]: [tn[img.cell], list(img.degen)] for c, img in enumerate(f.images)},
    }


def decode_map(doc: Dict, sets: Dict[str, FiniteSimplicialSet], name: str = "") -> SimplicialMap:
    try:
        S, T = sets[doc["source"]], sets[doc["target"]]
    except KeyError as e:
        raise SchemaError(f"map {name!r}: unknown set {e.args[0]!r}") from None
    sidx = {n: i for i, n in enumerate(cell_names(S))}
    tidx = {n: i for i, n in enumerate(cell_names(T))}
    images = [None] * len(S)
    for cell, entry in doc.get("images", {}).items():
        if cell not in sidx:
            raise SchemaError(f"map {name!r}: unknown source cell {cell!r}")
        base, epi = entry
        if base not in tidx:
            raise SchemaError(f"map {name!r}: cell {cell!r} sent to unknown cell {base!r}")
        images[sidx[cell]] = Simplex(tidx[base], tuple(int(e) for e in epi))
    missing = [cell_names(S)[i] for i, v in enumerate(images) if v is None]
    if missing:
        raise SchemaError(f"map {name!r}: no image for cell {missing[0]!r}")
    try:
        return SimplicialMap(S, T, images, name=name)
    except NaturalityError as e:
        raise SchemaError(f"map {name!r}: {e}") from e


def dumps(doc: Dict) -> str:
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=1) + "\n"


def set_document(X: FiniteSimplicialSet) -> Dict:
    doc = encode_set(X)
    doc["format"] = FORMAT
    return doc


def dump_set(X: FiniteSimplicialSet) -> str:
    return dumps(set_document(X))


def load_set(text: str, name: str = "") -> FiniteSimplicialSet:
    doc = json.loads(text)
    if doc.get("format") != FORMAT:
        raise SchemaError(f"unsupported format {doc.get('format')!r}")
    return decode_set(doc, name)
