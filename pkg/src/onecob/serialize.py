"""JSON documents for cobordisms and generator words.

A cobordism document looks like::

    {"source": "+-", "target": "", "arcs": [["in0", "in1"]], "circles": 0}
"""

from __future__ import annotations

import json

from .cobordism import Cobordism, CobordismError, Endpoint, obj
from .words import AtomLayer, GeneratorWord, PermutationLayer


def cobordism_to_doc(k: Cobordism) -> dict:
    return {
        "source": str(k.source),
        "target": str(k.target),
        "arcs": [[str(x), str(y)] for x, y in k.arcs],
        "circles": k.circles,
    }


def cobordism_from_doc(doc) -> Cobordism:
    if not isinstance(doc, dict):
        raise CobordismError("cobordism document must be a JSON object")
    unknown = set(doc) - {"source", "target", "arcs", "circles"}
    if unknown:
        raise CobordismError(f"unknown fields: {sorted(unknown)}")
    try:
        source, target = doc["source"], doc["target"]
        raw_arcs = doc.get("arcs", [])
    except KeyError as exc:
        raise CobordismError(f"missing field {exc.args[0]!r}") from None
    arcs = []
    for arc in raw_arcs:
        if not isinstance(arc, (list, tuple)) or len(arc) != 2:
            raise CobordismError(f"arc {arc!r} must list exactly two endpoints")
        arcs.append((Endpoint.parse(arc[0]), Endpoint.parse(arc[1])))
    circles = doc.get("circles", 0)
    if isinstance(circles, bool) or not isinstance(circles, int):
        raise CobordismError(f"circles must be an integer, got {circles!r}")
    return Cobordism(obj(source), obj(target), tuple(arcs), circles)


def parse_cobordism(text: str) -> Cobordism:
    """Decode and validate a cobordism JSON document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CobordismError(f"malformed JSON: {exc}") from None
    return cobordism_from_doc(doc)


def dump_cobordism(k: Cobordism) -> str:
    return json.dumps(cobordism_to_doc(k), ensure_ascii=False)


def word_to_doc(w: GeneratorWord) -> dict:
    layers = []
    for layer in w.layers:
        if isinstance(layer, PermutationLayer):
            layers.append({"permutation": list(layer.perm), "source": str(layer.source)})
        else:
            layers.append({"atoms": [a.value for a in layer.atoms]})
    return {
        "source": str(w.source),
        "target": str(w.target),
        "scalar_circles": w.scalar_circles,
        "layers": layers,
    }


def word_from_doc(doc) -> GeneratorWord:
    layers = []
    for layer in doc.get("layers", []):
        if "permutation" in layer:
            layers.append(PermutationLayer(tuple(layer["permutation"]), obj(layer["source"])))
        else:
            layers.append(AtomLayer(tuple(layer["atoms"])))
    return GeneratorWord(doc.get("scalar_circles", 0), tuple(layers))
