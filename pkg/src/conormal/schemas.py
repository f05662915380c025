"""JSON Schemas (draft 2020-12) for every document the CLI reads or writes."""

_chain_map = {"type": "object", "additionalProperties": {"type": "integer"}}

COMPLEX = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "face complex",
    "type": "object",
    "required": ["name", "num_hyperfaces", "faces", "incidences"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "num_hyperfaces": {"type": "integer", "minimum": 0},
        "faces": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "index_set"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "index_set": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                },
            },
        },
        "incidences": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["sub", "super"],
                "additionalProperties": False,
                "properties": {"sub": {"type": "string"}, "super": {"type": "string"}},
            },
        },
    },
}

INDEX_ASSIGNMENT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "index assignment",
    "type": "object",
    "required": ["degree", "values"],
    "additionalProperties": False,
    "properties": {
        "degree": {"type": "integer", "minimum": 0},
        "values": _chain_map,
        "note": {"type": "string"},
    },
}

_class = {
    "type": "object",
    "required": ["free", "torsion"],
    "additionalProperties": False,
    "properties": {
        "free": {"type": "array", "items": {"type": "integer"}},
        "torsion": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
}

VERDICT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "SFP verdict",
    "type": "object",
    "required": ["status", "witness", "class", "warnings", "diagnostics"],
    "additionalProperties": False,
    "properties": {
        "status": {"enum": ["NOT_A_CYCLE", "SFP_HOLDS", "SFP_FAILS", "TRIVIALLY_HOLDS"]},
        "witness": {"oneOf": [_chain_map, {"type": "null"}]},
        "class": {"oneOf": [_class, {"type": "null"}]},
        "warnings": {"type": "array", "items": {"type": "string"}},
        "diagnostics": {"type": "array", "items": {"type": "string"}},
        "odd": {
            "type": "object",
            "additionalProperties": False,
            "required": ["codim", "top_cycle", "h1_class"],
            "properties": {
                "codim": {"type": "integer"},
                "top_cycle": {"oneOf": [_chain_map, {"type": "null"}]},
                "h1_class": {"oneOf": [_class, {"type": "null"}]},
                "error": {"type": "string"},
            },
        },
    },
}

_matrix = {
    "type": "object",
    "required": ["degree", "rows", "cols", "entries"],
    "additionalProperties": False,
    "properties": {
        "degree": {"type": "integer"},
        "rows": {"type": "array", "items": {"type": "string"}},
        "cols": {"type": "array", "items": {"type": "string"}},
        "entries": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
    },
}

_periodic_part = {
    "type": "object",
    "required": ["degrees", "free_rank", "torsion", "group"],
    "additionalProperties": False,
    "properties": {
        "degrees": {"type": "array", "items": {"type": "integer"}},
        "free_rank": {"type": "integer", "minimum": 0},
        "torsion": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        "group": {"type": "string"},
    },
}

HOMOLOGY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "homology report",
    "type": "object",
    "required": ["name", "codim", "groups", "note"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "codim": {"type": "integer", "minimum": 0},
        "note": {"type": "string"},
        "groups": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["degree", "free_rank", "invariant_factors", "group", "generators"],
                "additionalProperties": False,
                "properties": {
                    "degree": {"type": "integer", "minimum": 0},
                    "free_rank": {"type": "integer", "minimum": 0},
                    "invariant_factors": {"type": "array", "items": {"type": "integer", "minimum": 2}},
                    "group": {"type": "string"},
                    "generators": {
                        "type": "object",
                        "required": ["free", "torsion"],
                        "additionalProperties": False,
                        "properties": {
                            "free": {"type": "array", "items": _chain_map},
                            "torsion": {
                                "type": "array",
                                "items": {
                                    "type": "object",
                                    "required": ["chain", "order"],
                                    "additionalProperties": False,
                                    "properties": {
                                        "chain": _chain_map,
                                        "order": {"type": "integer", "minimum": 2},
                                    },
                                },
                            },
                        },
                    },
                },
            },
        },
        "periodic": {
            "type": "object",
            "required": ["even", "odd"],
            "additionalProperties": False,
            "properties": {"even": _periodic_part, "odd": _periodic_part},
        },
        "matrices": {"type": "array", "items": _matrix},
    },
}

VALIDATION = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "validation report",
    "type": "object",
    "required": ["name", "valid", "violations"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "valid": {"type": "boolean"},
        "violations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["rule", "subject", "message"],
                "additionalProperties": False,
                "properties": {
                    "rule": {"type": "string"},
                    "subject": {"type": "string"},
                    "message": {"type": "string"},
                },
            },
        },
    },
}

FACES = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "face listing",
    "type": "object",
    "required": ["codim", "kind", "faces"],
    "additionalProperties": False,
    "properties": {
        "codim": {"type": "integer", "minimum": 0},
        "kind": {"enum": ["all", "cycles", "delta"]},
        "faces": {"type": "array", "items": {"type": "string"}},
    },
}
