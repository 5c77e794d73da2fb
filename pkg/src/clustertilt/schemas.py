"""JSON Schemas (draft 2020-12) for the documents the CLI writes.

They are plain dictionaries so the package needs no validator at run time;
the test-suite checks every emitted document against them.
"""

_LABEL = {"type": "string", "pattern": r"^(M\(\d+(,\d+)*\)|P\d+\[1\])$"}
_INTS = {"type": "array", "items": {"type": "integer"}}
_HEADER = {
    "schema_version": {"const": 1},
    "type": {"enum": ["A", "D", "E"]},
    "rank": {"type": "integer", "minimum": 1},
    "orientation": {"type": "string", "pattern": r"^[+-]*$"},
    "twisted": {"type": "boolean"},
}

ALGEBRA = {
    "type": "object",
    "required": ["dimension", "cartan", "quiver", "self_injective", "nakayama_permutation",
                 "nakayama_cycle_type", "kupisch_series", "radical_nilpotency", "special_biserial",
                 "associative", "matches"],
    "additionalProperties": False,
    "properties": {
        "dimension": {"type": "integer", "minimum": 1},
        "cartan": {"type": "array", "items": _INTS},
        "quiver": {
            "type": "object",
            "required": ["vertices", "arrows"],
            "properties": {
                "vertices": _INTS,
                "arrows": {"type": "array",
                           "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}},
            },
        },
        "self_injective": {"type": "boolean"},
        "nakayama_permutation": {"anyOf": [_INTS, {"type": "null"}]},
        "nakayama_cycle_type": {"anyOf": [_INTS, {"type": "null"}]},
        "kupisch_series": {"anyOf": [_INTS, {"type": "null"}]},
        "radical_nilpotency": {"anyOf": [{"type": "integer"}, {"type": "null"}]},
        "special_biserial": {"type": "boolean"},
        "associative": {"type": "boolean"},
        "matches": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["family", "template", "template_dimension", "scalars", "vertex_map"],
                "properties": {
                    "family": {"enum": ["NakayamaCycle", "BiserialD2m"]},
                    "template": {"type": "string"},
                    "template_dimension": {"type": "integer"},
                    "scalars": {"type": "array", "items": {"type": "string"}},
                    "vertex_map": {"type": "object", "additionalProperties": {"type": "integer"}},
                },
            },
        },
    },
}

FINALIST = {
    "type": "object",
    "required": ["tilting", "normalized", "algebra", "trivial_extension", "family", "template"],
    "additionalProperties": False,
    "properties": {
        "tilting": {"type": "array", "items": _LABEL},
        "normalized": {
            "type": "object",
            "required": ["orientation", "tau_power", "sink_reflections", "objects"],
            "properties": {
                "orientation": {"type": "string"},
                "tau_power": {"type": "integer", "minimum": 0},
                "sink_reflections": _INTS,
                "objects": {"type": "array", "items": _LABEL},
            },
        },
        "algebra": ALGEBRA,
        "trivial_extension": {
            "type": "object",
            "required": ["dim_gamma", "dim_tilted", "ext2_total", "cartan_ok", "ok"],
            "properties": {k: {"type": "integer"} for k in ("dim_gamma", "dim_tilted", "ext2_total")}
            | {"cartan_ok": {"type": "boolean"}, "ok": {"type": "boolean"}},
        },
        "family": {"anyOf": [{"type": "string"}, {"type": "null"}]},
        "template": {"anyOf": [{"type": "string"}, {"type": "null"}]},
    },
}

REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "classification report",
    "type": "object",
    "required": list(_HEADER) + ["tool_version", "counts", "families", "finalists", "rejected_candidates"],
    "additionalProperties": False,
    "properties": _HEADER | {
        "tool_version": {"type": "string"},
        "counts": {
            "type": "object",
            "required": ["indecomposables", "orbit_lengths", "cluster_tilting", "tau2_fixed_candidates",
                         "finalists"],
            "additionalProperties": False,
            "properties": {
                "indecomposables": {"type": "integer"},
                "orbit_lengths": _INTS,
                "cluster_tilting": {"type": "integer"},
                "tau2_fixed_candidates": {"type": "integer"},
                "finalists": {"type": "integer"},
            },
        },
        "families": {"type": "array", "items": {"enum": ["NakayamaCycle", "BiserialD2m"]}},
        "finalists": {"type": "array", "items": FINALIST},
        "rejected_candidates": {"type": "array", "items": {"type": "array", "items": _LABEL}},
    },
}

ORBITS = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "tau_c orbit table",
    "type": "object",
    "required": list(_HEADER) + ["orbits"],
    "additionalProperties": False,
    "properties": _HEADER | {
        "orbits": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["representative", "length", "members"],
                "properties": {
                    "representative": _LABEL,
                    "length": {"type": "integer", "minimum": 1},
                    "members": {"type": "array", "items": _LABEL},
                },
            },
        },
    },
}

QUIVER = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "AR quiver",
    "type": "object",
    "required": list(_HEADER) + ["mode", "vertices", "arrows", "translation", "marked", "removed"],
    "additionalProperties": False,
    "properties": _HEADER | {
        "mode": {"enum": ["cluster", "mod-gamma"]},
        "vertices": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["label", "slice", "row", "marked", "seam"],
                "additionalProperties": False,
                "properties": {
                    "label": _LABEL,
                    "slice": {"type": "integer"},
                    "row": {"type": "integer", "minimum": 1},
                    "marked": {"type": "boolean"},
                    "seam": {"type": "boolean"},
                    "projective": {"type": "boolean"},
                    "injective": {"type": "boolean"},
                },
            },
        },
        "arrows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["source", "target", "seam"],
                "properties": {"source": _LABEL, "target": _LABEL, "seam": {"type": "boolean"}},
            },
        },
        "translation": {"type": "array", "items": {"type": "array", "items": _LABEL, "minItems": 2, "maxItems": 2}},
        "marked": {"type": "array", "items": _LABEL},
        "removed": {"type": "array", "items": _LABEL},
        "marked_tau2_stable": {"type": "boolean"},
    },
}

TILTING_LINE = {"type": "array", "items": _LABEL, "minItems": 1}
