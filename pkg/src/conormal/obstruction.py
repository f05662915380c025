"""Corner-cycle faces and the stable Fredholm perturbation (SFP) decision.

Index values attached to faces (suspended Atiyah-Singer or Fredholm
indices) are computed elsewhere; here they are plain integers.  Given them,
deciding SFP is a question about the resulting conormal chain:

* codimension 1: there is no even obstruction, SFP always holds;
* codimension 2: ``H_2 = Ker δ_2``, so SFP holds iff the chain vanishes;
* codimension 3: SFP holds iff the chain is ``δ_3`` of some 3-chain.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .chain import Chain, ChainComplex, as_chain_complex
from .face_complex import FaceComplex, FaceId
from .homology import (
    ClassCoordinates,
    NotACycleError,
    boundary_witness,
    homology_class,
    require_cycle,
)
from .zlinalg import kernel_basis, solvability


class Status(str, Enum):
    NOT_A_CYCLE = "NOT_A_CYCLE"
    SFP_HOLDS = "SFP_HOLDS"
    SFP_FAILS = "SFP_FAILS"
    TRIVIALLY_HOLDS = "TRIVIALLY_HOLDS"


class IndexDocumentError(ValueError):
    """Malformed index-assignment document."""


@dataclass(frozen=True)
class IndexAssignment:
    degree: int
    values: dict[FaceId, int]
    provenance_note: str = ""

    @classmethod
    def from_json(cls, text: str) -> IndexAssignment:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise IndexDocumentError(f"{exc.msg} (line {exc.lineno}, column {exc.colno})") from None
        return cls.from_dict(doc)

    @classmethod
    def from_dict(cls, doc) -> IndexAssignment:
        if not isinstance(doc, dict):
            raise IndexDocumentError("index document must be an object")
        unknown = set(doc) - {"degree", "values", "note"}
        if unknown:
            raise IndexDocumentError(f"unknown field(s) {sorted(unknown)}")
        deg, values = doc.get("degree"), doc.get("values")
        if not _is_int(deg):
            raise IndexDocumentError("degree must be an integer")
        if not isinstance(values, dict) or not all(_is_int(v) for v in values.values()):
            raise IndexDocumentError("values must map face ids to integers")
        note = doc.get("note", "")
        if not isinstance(note, str):
            raise IndexDocumentError("note must be a string")
        return cls(deg, dict(values), note)

    def to_dict(self) -> dict:
        return {"degree": self.degree, "values": dict(sorted(self.values.items())), "note": self.provenance_note}


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class ObstructionVerdict:
    status: Status
    witness: Chain | None = None
    class_coordinates: ClassCoordinates | None = None
    warnings: tuple[str, ...] = ()
    diagnostics: tuple[str, ...] = ()
    chain: Chain | None = field(default=None, compare=False)

    @property
    def holds(self) -> bool:
        return self.status in (Status.SFP_HOLDS, Status.TRIVIALLY_HOLDS)

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "witness": None if self.witness is None else dict(self.witness.coeffs),
            "class": None if self.class_coordinates is None else self.class_coordinates.to_dict(),
            "warnings": list(self.warnings),
            "diagnostics": list(self.diagnostics),
        }


def _check_degree(K: ChainComplex, p: int, lo: int, hi: int):
    if not lo <= p <= hi:
        raise ValueError(f"degree {p} out of range {lo}..{hi}")


def corner_cycle_faces(X: FaceComplex | ChainComplex, p: int) -> list[FaceId]:
    """Codimension-``p`` faces carried with nonzero coefficient by some integer cycle.

    A face qualifies iff its coordinate is nonzero on some vector of an
    integer kernel basis of ``δ_p``.
    """
    K = as_chain_complex(X)
    _check_degree(K, p, 1, K.top)
    basis = kernel_basis(K.boundary(p))
    return [f for k, f in enumerate(K.basis(p)) if any(v[k] for v in basis)]


def boundary_touched_faces(X: FaceComplex | ChainComplex, p: int) -> list[FaceId]:
    """Codimension-``p`` faces carried by some boundary ``δ_{p+1}(a)``: the nonzero rows of ``δ_{p+1}``."""
    K = as_chain_complex(X)
    _check_degree(K, p, 1, K.top)
    M = K.boundary(p + 1)
    return [f for k, f in enumerate(K.basis(p)) if any(M.row(k))]


def assemble_index_chain(X: FaceComplex | ChainComplex, idx: IndexAssignment) -> tuple[Chain, list[str]]:
    """The chain ``Σ idx(Y) · Y ⊗ ε_Y`` and warnings about its support.

    In degrees 2 and 3 the index formulas only range over corner-cycle
    faces; nonzero values elsewhere are kept but warned about.
    """
    K = as_chain_complex(X)
    p = idx.degree
    _check_degree(K, p, 0, K.top)
    basis = set(K.basis(p))
    unknown = sorted(set(idx.values) - basis)
    if unknown:
        raise KeyError(f"not codimension-{p} faces: {unknown}")
    chain = Chain(p, idx.values)
    warnings = []
    if p in (2, 3) and chain:
        allowed = set(corner_cycle_faces(K, p))
        for f in chain.support:
            if f not in allowed:
                warnings.append(f"face {f} has index {chain[f]} but belongs to no corner cycle")
    return chain, warnings


def _not_a_cycle(chain: Chain, boundary: Chain, warnings) -> ObstructionVerdict:
    diag = tuple(f"boundary coefficient {c:+d} on codimension-{boundary.degree} face {f}"
                 for f, c in boundary.coeffs.items())
    return ObstructionVerdict(Status.NOT_A_CYCLE, None, None, tuple(warnings), diag, chain)


def decide_sfp(X: FaceComplex | ChainComplex, idx: IndexAssignment) -> ObstructionVerdict:
    """Decide SFP from the degree-2 index values of a codimension 1, 2 or 3 complex."""
    K = as_chain_complex(X)
    d = K.top
    if d > 3 or d < 1:
        raise ValueError(f"SFP decision covers codimension 1..3, got {d}")
    if idx.degree != 2:
        raise ValueError(f"SFP needs degree-2 index values, got degree {idx.degree}")
    if d == 1:
        if idx.values:
            raise KeyError(f"codimension-1 complex has no codimension-2 faces: {sorted(idx.values)}")
        return ObstructionVerdict(
            Status.TRIVIALLY_HOLDS,
            diagnostics=("even conormal homology of a codimension-1 complex carries no obstruction",),
        )
    chain, warnings = assemble_index_chain(K, idx)
    return decide_sfp_on(K, chain, warnings)


def decide_sfp_on(K: ChainComplex, chain: Chain, warnings=()) -> ObstructionVerdict:
    """Verdict for a degree-2 index chain in a complex of top degree 2 or 3."""
    d = K.top
    boundary = K.boundary_of(chain)
    if boundary:
        return _not_a_cycle(chain, boundary, warnings)
    diagnostics = []
    if d == 3:
        cn = corner_cycle_faces(K, 2)
        touched = set(boundary_touched_faces(K, 2))
        for f in cn:
            if f not in touched and chain[f]:
                diagnostics.append(f"face {f} is in a corner cycle but no boundary; its index {chain[f]} must vanish")
        rest = {f: chain[f] for f in cn if f in touched and chain[f]}
        if rest:
            restricted = Chain(2, rest)
            kind = solvability(K.boundary(3), restricted.to_vector(K.basis(2)))
            diagnostics.append(f"part supported on boundary-touched faces is {_SOLVABILITY[kind]}")
    witness = boundary_witness(K, chain)
    if witness is not None:
        return ObstructionVerdict(Status.SFP_HOLDS, witness if d == 3 else None, None,
                                  tuple(warnings), tuple(diagnostics), chain)
    coords = homology_class(K, chain)
    if d == 3:
        kind = solvability(K.boundary(3), chain.to_vector(K.basis(2)))
        diagnostics.append(f"index chain is {_SOLVABILITY[kind]}")
    return ObstructionVerdict(Status.SFP_FAILS, None, coords, tuple(warnings), tuple(diagnostics), chain)


_SOLVABILITY = {
    "integral": "a boundary",
    "rational": "a boundary over Q but not over Z",
    "none": "not a boundary even over Q",
}


@dataclass(frozen=True)
class OddIndexClass:
    """Odd conormal index data.

    ``top_cycle`` is the ``Ker δ_d`` component (codimension 1 and 3);
    ``h1_class`` the class in ``H_1`` (codimension 2 and 3).
    """

    codim: int
    top_cycle: Chain | None
    h1_class: ClassCoordinates | None

    def to_dict(self) -> dict:
        return {
            "codim": self.codim,
            "top_cycle": None if self.top_cycle is None else dict(self.top_cycle.coeffs),
            "h1_class": None if self.h1_class is None else self.h1_class.to_dict(),
        }


def odd_index_class(X: FaceComplex | ChainComplex, idx_top: IndexAssignment | None = None,
                    idx_one: IndexAssignment | None = None) -> OddIndexClass:
    """Validate odd index data and place it in ``Ker δ_d ⊕ H_1``.

    Raises :class:`NotACycleError` naming the faces where a boundary is
    nonzero.  ``idx_top`` is ignored in codimension 2, ``idx_one`` in
    codimension 1.
    """
    K = as_chain_complex(X)
    d = K.top
    if d > 3 or d < 1:
        raise ValueError(f"odd index class covers codimension 1..3, got {d}")
    top = None
    if d in (1, 3):
        if idx_top is None:
            raise ValueError(f"codimension {d} needs degree-{d} index values")
        if idx_top.degree != d:
            raise ValueError(f"top index values must have degree {d}, got {idx_top.degree}")
        top, _ = assemble_index_chain(K, idx_top)
        require_cycle(K, top)
    h1 = None
    if d in (2, 3):
        if idx_one is None:
            raise ValueError(f"codimension {d} needs degree-1 index values")
        if idx_one.degree != 1:
            raise ValueError(f"H_1 index values must have degree 1, got {idx_one.degree}")
        one, _ = assemble_index_chain(K, idx_one)
        h1 = homology_class(K, one)
    return OddIndexClass(d, top, h1)


__all__ = [
    "IndexAssignment",
    "IndexDocumentError",
    "NotACycleError",
    "ObstructionVerdict",
    "OddIndexClass",
    "Status",
    "assemble_index_chain",
    "boundary_touched_faces",
    "corner_cycle_faces",
    "decide_sfp",
    "decide_sfp_on",
    "odd_index_class",
]
