"""Conormal homology groups and cycle/boundary decisions.

All functions accept either a :class:`FaceComplex` (its conormal complex
is built and cached) or a ready :class:`ChainComplex`.

Generators come out of Smith normal form change-of-basis matrices: they
are deterministic for a given complex but not canonical.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .chain import Chain, ChainComplex, as_chain_complex
from .face_complex import FaceComplex
from .zlinalg import AbelianPresentation, Quotient, kernel_basis, quotient_presentation, solve_integer

Complex = FaceComplex | ChainComplex


class NotACycleError(ValueError):
    """A chain expected to be a cycle has nonzero boundary."""

    def __init__(self, chain: Chain, boundary: Chain):
        self.chain = chain
        self.boundary = boundary
        faces = ", ".join(f"{f} ({c:+d})" for f, c in boundary.coeffs.items())
        super().__init__(f"degree-{chain.degree} chain is not a cycle; boundary is nonzero on {faces}")


@dataclass(frozen=True)
class HomologyGroup:
    degree: int
    free_rank: int
    invariant_factors: tuple[int, ...]
    free_generators: tuple[Chain, ...]
    torsion_generators: tuple[tuple[Chain, int], ...]
    _quotient: Quotient = field(repr=False, compare=False)
    _basis: tuple[str, ...] = field(repr=False, compare=False)

    @property
    def presentation(self) -> AbelianPresentation:
        return AbelianPresentation(self.free_rank, self.invariant_factors)

    @property
    def is_zero(self) -> bool:
        return self.presentation.is_trivial

    def __str__(self):
        return str(self.presentation)


@dataclass(frozen=True)
class PeriodicGroups:
    even: tuple[HomologyGroup, ...]
    odd: tuple[HomologyGroup, ...]


@dataclass(frozen=True)
class ClassCoordinates:
    free: tuple[int, ...]
    torsion: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    def to_dict(self) -> dict:
        return {"free": list(self.free), "torsion": list(self.torsion)}


def homology_group(X: Complex, p: int) -> HomologyGroup:
    K = as_chain_complex(X)
    if not 0 <= p <= K.top:
        raise ValueError(f"degree {p} out of range 0..{K.top}")
    basis = K.basis(p)
    cycles = kernel_basis(K.boundary(p))
    boundaries = K.boundary(p + 1).columns()
    q = quotient_presentation(cycles, boundaries, ambient_dim=len(basis))
    free = tuple(Chain.from_vector(p, basis, v) for v in q.free_generators)
    tors = tuple((Chain.from_vector(p, basis, v), m) for v, m in q.torsion_generators)
    return HomologyGroup(p, q.presentation.free_rank, q.presentation.invariant_factors, free, tors, q, basis)


def all_homology(X: Complex) -> list[HomologyGroup]:
    K = as_chain_complex(X)
    return [homology_group(K, p) for p in range(K.top + 1)]


def periodic_homology(X: Complex) -> PeriodicGroups:
    groups = all_homology(X)
    return PeriodicGroups(tuple(groups[0::2]), tuple(groups[1::2]))


def is_cycle(X: Complex, c: Chain) -> bool:
    if c.degree == 0:
        return True
    return not as_chain_complex(X).boundary_of(c)


def require_cycle(X: Complex, c: Chain) -> None:
    """Raise :class:`NotACycleError` unless ``c`` is a cycle."""
    if c.degree == 0:
        return
    b = as_chain_complex(X).boundary_of(c)
    if b:
        raise NotACycleError(c, b)


def boundary_witness(X: Complex, c: Chain) -> Chain | None:
    """A chain ``a`` with ``δ(a) = c``, or ``None`` if ``c`` is not a boundary."""
    K = as_chain_complex(X)
    p = c.degree
    if not 0 <= p <= K.top:
        raise ValueError(f"degree {p} out of range 0..{K.top}")
    require_cycle(K, c)
    x = solve_integer(K.boundary(p + 1), c.to_vector(K.basis(p)))
    if x is None:
        return None
    return Chain.from_vector(p + 1, K.basis(p + 1), x)


def homology_class(X: Complex, c: Chain) -> ClassCoordinates:
    """Coordinates of ``[c]`` against the generators of :func:`homology_group`."""
    K = as_chain_complex(X)
    require_cycle(K, c)
    H = homology_group(K, c.degree)
    free, torsion = H._quotient.coordinates(c.to_vector(H._basis))
    return ClassCoordinates(tuple(free), tuple(torsion))


def betti_numbers(X: Complex) -> list[int]:
    return [H.free_rank for H in all_homology(X)]


def format_group(H: HomologyGroup) -> str:
    return str(H.presentation)


def homology_report(X: Complex, *, periodic: bool = False) -> dict:
    """Per-degree homology as a JSON-ready document."""
    K = as_chain_complex(X)
    groups = all_homology(K)
    doc = {
        "name": X.name if isinstance(X, FaceComplex) else "",
        "codim": K.top,
        "groups": [_group_doc(H) for H in groups],
        "note": "generators are deterministic but not canonical",
    }
    if periodic:
        doc["periodic"] = {
            "even": _periodic_doc(groups[0::2]),
            "odd": _periodic_doc(groups[1::2]),
        }
    return doc


def _group_doc(H: HomologyGroup) -> dict:
    return {
        "degree": H.degree,
        "free_rank": H.free_rank,
        "invariant_factors": list(H.invariant_factors),
        "group": str(H),
        "generators": {
            "free": [dict(g.coeffs) for g in H.free_generators],
            "torsion": [{"chain": dict(g.coeffs), "order": m} for g, m in H.torsion_generators],
        },
    }


def _periodic_doc(groups) -> dict:
    free = sum(H.free_rank for H in groups)
    factors = sorted(d for H in groups for d in H.invariant_factors)
    return {
        "degrees": [H.degree for H in groups],
        "free_rank": free,
        "torsion": factors,
        "group": " ⊕ ".join(str(H) for H in groups if not H.is_zero) or "0",
    }
