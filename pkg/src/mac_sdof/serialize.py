"""JSON codecs, a deterministic emitter, and the JSON schemas of all outputs.

Floats are written with 17 significant digits and keys keep insertion
order, so identical inputs give byte-identical documents.
"""
import json
import math

import numpy as np

from .gsvd import DimProfile, GsvdResult


def matrix_to_json(m):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    flat = m.reshape(-1)
    return {"rows": int(m.shape[0]), "cols": int(m.shape[1]),
            "re": [float(x) for x in flat.real], "im": [float(x) for x in flat.imag]}


def matrix_from_json(obj):
    """Decode ``{"rows", "cols", "re", "im"}``; ``im`` may be omitted."""
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj.get("im", [0.0] * len(re)), dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix object: {exc}") from exc
    if rows < 0 or cols < 0:
        raise ValueError("matrix dimensions must be nonnegative")
    if re.size != rows * cols or im.size != rows * cols:
        raise ValueError(f"matrix entries must number rows*cols = {rows * cols}")
    return (re + 1j * im).reshape(rows, cols)


def gsvd_to_json(g):
    out = {k: matrix_to_json(getattr(g, k))
           for k in ("u1", "u2", "q", "w", "r_factor", "sigma1", "sigma2")}
    out["dims"] = g.dims.to_json()
    return out


def gsvd_from_json(obj):
    mats = {k: matrix_from_json(obj[k])
            for k in ("u1", "u2", "q", "w", "r_factor", "sigma1", "sigma2")}
    d = obj["dims"]
    return GsvdResult(dims=DimProfile.from_ranks(d["r0"], d["r1"], d["r2"]), **mats)


def _has_dict(o):
    if isinstance(o, dict):
        return True
    return isinstance(o, (list, tuple)) and any(_has_dict(v) for v in o)


def _encode(o, indent, level):
    pad, inner = " " * (indent * level), " " * (indent * (level + 1))
    if isinstance(o, dict):
        if not o:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {_encode(v, indent, level + 1)}"
                 for k, v in o.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(o, (list, tuple)):
        if not o:
            return "[]"
        if not _has_dict(o):
            flat = "[" + ", ".join(_encode(v, indent, level) for v in o) + "]"
            if "\n" not in flat and (len(flat) <= 72 or not any(
                    isinstance(v, (list, tuple)) for v in o)):
                return flat
        items = [inner + _encode(v, indent, level + 1) for v in o]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(o, (bool, np.bool_)) or o is None:
        return json.dumps(bool(o) if o is not None else None)
    if isinstance(o, (int, np.integer)):
        return str(int(o))
    if isinstance(o, (float, np.floating)):
        x = float(o)
        if not math.isfinite(x):
            raise ValueError("non-finite float cannot be written as JSON")
        text = format(x, ".17g")
        # keep floats recognizable as floats
        if all(ch not in text for ch in ".en"):
            text += ".0"
        return text
    if isinstance(o, str):
        return json.dumps(o)
    raise TypeError(f"cannot encode {type(o).__name__} as JSON")


def dumps(obj, indent=2):
    """Deterministic JSON text with a trailing newline."""
    return _encode(obj, indent, 0) + "\n"


# JSON schemas ---------------------------------------------------------------

_INT = {"type": "integer", "minimum": 0}
_FRACTION = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}

COMPLEX_MATRIX = {
    "type": "object",
    "required": ["rows", "cols", "re", "im"],
    "properties": {
        "rows": _INT, "cols": _INT,
        "re": {"type": "array", "items": {"type": "number"}},
        "im": {"type": "array", "items": {"type": "number"}},
    },
    "additionalProperties": False,
}

DIM_PROFILE = {
    "type": "object",
    "required": ["r0", "r1", "r2", "s", "r1_tilde", "r2_tilde"],
    "properties": {k: _INT for k in ("r0", "r1", "r2", "s", "r1_tilde", "r2_tilde")},
    "additionalProperties": False,
}

GSVD_RESULT = {
    "type": "object",
    "required": ["u1", "u2", "q", "w", "r_factor", "sigma1", "sigma2", "dims"],
    "properties": {
        **{k: COMPLEX_MATRIX for k in ("u1", "u2", "q", "w", "r_factor", "sigma1", "sigma2")},
        "dims": DIM_PROFILE,
    },
    "additionalProperties": False,
}

PARALLEL_MODEL = {
    "type": "object",
    "required": ["a", "b", "c", "n_e", "sigma_plus", "sigma", "s_bar"],
    "properties": {
        "a": _INT, "b": _INT, "c": _INT, "n_e": _INT,
        "sigma_plus": {"type": "number", "exclusiveMinimum": 0, "maximum": 1},
        "sigma": {"type": "number", "minimum": 1},
        "s_bar": {"type": "number", "exclusiveMinimum": 0, "maximum": 1},
    },
    "additionalProperties": False,
}

DOF_REGION = {
    "type": "object",
    "required": ["vertices", "halfspaces"],
    "properties": {
        "vertices": {"type": "array", "minItems": 1,
                     "items": {"type": "array", "items": _FRACTION,
                               "minItems": 2, "maxItems": 2}},
        "halfspaces": {"type": "array",
                       "items": {"type": "array", "items": {"type": "integer"},
                                 "minItems": 6, "maxItems": 6}},
    },
    "additionalProperties": False,
}

_LINKS = {"type": "array", "items": {"type": "integer", "minimum": 1}}

CERTIFICATE = {
    "type": "object",
    "required": ["config", "case", "achievable", "outer", "verdict", "steps", "swap_applied"],
    "properties": {
        "config": {"type": "object", "required": ["r0", "r1", "r2", "n_e"],
                   "properties": {k: _INT for k in ("r0", "r1", "r2", "n_e")},
                   "additionalProperties": False},
        "case": {"enum": ["A", "B", "C", "Degenerate"]},
        "achievable": DOF_REGION,
        "outer": DOF_REGION,
        "verdict": {"type": "boolean"},
        "steps": {"type": "array", "items": {
            "type": "object", "required": ["label", "weights", "terms"],
            "properties": {
                "label": {"type": "string"},
                "weights": {"type": "array", "items": _INT, "minItems": 2, "maxItems": 2},
                "terms": {"type": "array", "items": {
                    "type": "object", "required": ["desc", "cap"],
                    "properties": {"desc": {"type": "string"}, "cap": _INT},
                    "additionalProperties": False}},
            },
            "additionalProperties": False}},
        "swap_applied": {"type": "boolean"},
        "eavesdropper_sets": {"type": "object", "additionalProperties": {
            "anyOf": [_LINKS, {"type": "array", "items": _LINKS}]}},
    },
    "additionalProperties": False,
}

CERTIFY_SWEEP = {
    "type": "object",
    "required": ["sweep_max", "count", "all_verdicts", "results"],
    "properties": {
        "sweep_max": _INT, "count": _INT, "all_verdicts": {"type": "boolean"},
        "results": {"type": "array", "items": {
            "type": "object", "required": ["antennas", "certificate"],
            "properties": {
                "antennas": {"type": "object",
                             "required": ["nt1", "nt2", "nr", "n_e"],
                             "properties": {k: _INT for k in ("nt1", "nt2", "nr", "n_e")},
                             "additionalProperties": False},
                "certificate": CERTIFICATE},
            "additionalProperties": False}},
    },
    "additionalProperties": False,
}

_INT_SET = {"anyOf": [{"type": "null"}, {"type": "array", "items": {"type": "integer"}}]}

RECURSIVE_COVER = {
    "type": "object",
    "required": ["f", "g", "rows"],
    "properties": {
        "f": _INT, "g": _INT,
        "rows": {"type": "array", "items": {
            "type": "object", "required": ["i", "F", "H", "V", "c", "case"],
            "properties": {"i": _INT, "F": _INT_SET, "H": _INT_SET,
                           "V": {"type": "array", "items": {"type": "integer"}},
                           "c": _INT, "case": {"enum": [None, "I", "II"]}},
            "additionalProperties": False}},
    },
    "additionalProperties": False,
}

DECOMPOSE_OUTPUT = {
    "type": "object",
    "required": ["gsvd", "parallel_model"],
    "properties": {"gsvd": GSVD_RESULT, "parallel_model": PARALLEL_MODEL},
    "additionalProperties": False,
}
