"""Integer conormal homology of manifolds with embedded corners.

Build or load a :class:`FaceComplex`, then ask for its homology or decide
the stable Fredholm perturbation property from per-face index integers::

    >>> from conormal import builders, all_homology
    >>> [str(H) for H in all_homology(builders.square())]
    ['0', '0', 'Z']
"""
from .builders import disk, hypercube, interval, point, polygon, product, simplex, square
from .chain import Chain, ChainComplex, boundary_matrix, boundary_of, chain_add, chain_scale, contraction_sign
from .face_complex import (
    ComplexError,
    ComplexSyntaxError,
    Face,
    FaceComplex,
    Incidence,
    ValidationError,
    ValidationReport,
    parse_complex,
    serialize,
    validate,
)
from .homology import (
    HomologyGroup,
    NotACycleError,
    PeriodicGroups,
    all_homology,
    boundary_witness,
    homology_class,
    homology_group,
    is_cycle,
    periodic_homology,
)
from .obstruction import (
    IndexAssignment,
    ObstructionVerdict,
    Status,
    assemble_index_chain,
    boundary_touched_faces,
    corner_cycle_faces,
    decide_sfp,
    odd_index_class,
)
from .zlinalg import (
    AbelianPresentation,
    IntMatrix,
    SNFResult,
    kernel_basis,
    quotient_presentation,
    rational_rank,
    snf,
    solve_integer,
)

__version__ = "0.1.0"

__all__ = [
    "disk",
    "hypercube",
    "interval",
    "point",
    "polygon",
    "product",
    "simplex",
    "square",
    "Chain",
    "ChainComplex",
    "boundary_matrix",
    "boundary_of",
    "chain_add",
    "chain_scale",
    "contraction_sign",
    "ComplexError",
    "ComplexSyntaxError",
    "Face",
    "FaceComplex",
    "Incidence",
    "ValidationError",
    "ValidationReport",
    "parse_complex",
    "serialize",
    "validate",
    "HomologyGroup",
    "NotACycleError",
    "PeriodicGroups",
    "all_homology",
    "boundary_witness",
    "homology_class",
    "homology_group",
    "is_cycle",
    "periodic_homology",
    "IndexAssignment",
    "ObstructionVerdict",
    "Status",
    "assemble_index_chain",
    "boundary_touched_faces",
    "corner_cycle_faces",
    "decide_sfp",
    "odd_index_class",
    "AbelianPresentation",
    "IntMatrix",
    "SNFResult",
    "kernel_basis",
    "quotient_presentation",
    "rational_rank",
    "snf",
    "solve_integer",
]
