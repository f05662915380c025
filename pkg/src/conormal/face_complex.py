"""Combinatorial manifolds with embedded corners.

A :class:`FaceComplex` records the connected faces of a manifold with
embedded corners, the index set ``I(f)`` of hyperfaces containing each
face, and the incidences ``f ⊂ closure(g)`` between faces whose codimension
differs by one.  Faces are identified by opaque string labels, so two
distinct faces may share an index set (the two corners of a bigon, say).

The on-disk format is a small JSON document::

    {"name": "square", "num_hyperfaces": 4,
     "faces": [{"id": "v13", "index_set": [1, 3]}, ...],
     "incidences": [{"sub": "v13", "super": "e1"}, ...]}

The dropped index of an incidence is derived from the two index sets and is
never stored.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

FaceId = str


class ComplexError(ValueError):
    """Base class for malformed face-complex input."""


class ComplexSyntaxError(ComplexError):
    """The document is not well-formed JSON or does not follow the schema."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ValidationError(ComplexError):
    """The document parsed but violates the embedded-corners axioms."""

    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("; ".join(v.message for v in report.violations))


@dataclass(frozen=True, order=True)
class Face:
    id: FaceId
    index_set: tuple[int, ...]

    @property
    def codim(self) -> int:
        return len(self.index_set)


@dataclass(frozen=True, order=True)
class Incidence:
    """``sub`` lies in the closure of ``super``; ``dropped_index`` is i(super, sub).

    ``dropped_index`` is ``None`` when the index sets are not nested with a
    difference of exactly one element; :func:`validate` reports this.
    """

    sub: FaceId
    super: FaceId
    dropped_index: int | None


@dataclass(frozen=True)
class Violation:
    rule: str
    subject: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def messages(self) -> list[str]:
        return [v.message for v in self.violations]


@dataclass(frozen=True)
class FaceComplex:
    """Immutable face complex; faces and incidences are kept in canonical order.

    Construct with :meth:`build` (which derives dropped indices) or
    :func:`parse_complex`.  Instances are hashable, so derived data such as
    boundary matrices can be cached per complex.
    """

    name: str
    num_hyperfaces: int
    faces: tuple[Face, ...]
    incidences: tuple[Incidence, ...]
    _by_id: Mapping[FaceId, Face] = field(init=False, repr=False, compare=False, hash=False)
    _supers: Mapping[FaceId, tuple[tuple[FaceId, int], ...]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        object.__setattr__(self, "faces", tuple(sorted(self.faces, key=lambda f: (f.codim, f.id))))
        object.__setattr__(self, "incidences", tuple(sorted(self.incidences, key=_incidence_key)))
        by_id: dict[FaceId, Face] = {}
        for f in self.faces:
            by_id.setdefault(f.id, f)
        supers: dict[FaceId, list[tuple[FaceId, int]]] = defaultdict(list)
        for inc in self.incidences:
            if inc.dropped_index is not None:
                supers[inc.sub].append((inc.super, inc.dropped_index))
        object.__setattr__(self, "_by_id", by_id)
        object.__setattr__(
            self, "_supers", {k: tuple(sorted(v)) for k, v in supers.items()}
        )

    @classmethod
    def build(
        cls,
        name: str,
        num_hyperfaces: int,
        faces: Iterable[tuple[FaceId, Iterable[int]]],
        incidences: Iterable[tuple[FaceId, FaceId]],
    ) -> FaceComplex:
        """Assemble a complex from ``(id, index_set)`` and ``(sub, super)`` pairs.

        Index sets are taken as given (not sorted), so that validation can
        flag unsorted input.  No validation is performed here.
        """
        face_list = [Face(str(fid), tuple(int(i) for i in iset)) for fid, iset in faces]
        index_of = {}
        for f in face_list:
            index_of.setdefault(f.id, f.index_set)
        incs = []
        for sub, sup in incidences:
            incs.append(Incidence(sub, sup, _dropped(index_of.get(sub), index_of.get(sup))))
        return cls(name, int(num_hyperfaces), tuple(face_list), tuple(incs))

    @property
    def codim(self) -> int:
        return max((f.codim for f in self.faces), default=0)

    def __contains__(self, face_id: object) -> bool:
        return face_id in self._by_id

    def face(self, face_id: FaceId) -> Face:
        try:
            return self._by_id[face_id]
        except KeyError:
            raise KeyError(f"unknown face id {face_id!r}") from None

    def index_set(self, face_id: FaceId) -> tuple[int, ...]:
        return self.face(face_id).index_set

    def faces_of_codim(self, p: int) -> list[FaceId]:
        """Labels of the codimension-``p`` faces, sorted lexicographically.

        This order fixes the row/column basis of every boundary matrix.
        """
        if not 0 <= p <= self.codim:
            raise ValueError(f"codimension {p} out of range 0..{self.codim}")
        return sorted(f.id for f in self.faces if f.codim == p)

    def supers_of(self, face_id: FaceId) -> list[tuple[FaceId, int]]:
        """``(super, dropped_index)`` pairs for every incidence below ``face_id``."""
        self.face(face_id)
        return list(self._supers.get(face_id, ()))

    def super_along(self, face_id: FaceId, index: int) -> FaceId:
        """The unique face containing ``face_id`` obtained by dropping ``index``."""
        hits = [g for g, i in self._supers.get(face_id, ()) if i == index]
        if len(hits) != 1:
            raise KeyError(f"face {face_id} has {len(hits)} supers for dropped index {index}")
        return hits[0]

    def components(self) -> list[FaceComplex]:
        """Connected components, one per codimension-0 face, sorted by that face's label."""
        parent = {f.id: f.id for f in self.faces}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for inc in self.incidences:
            if inc.sub in parent and inc.super in parent:
                parent[find(inc.sub)] = find(inc.super)
        groups: dict[FaceId, list[Face]] = defaultdict(list)
        for f in self.faces:
            groups[find(f.id)].append(f)
        out = []
        for members in groups.values():
            ids = {f.id for f in members}
            top = min((f.id for f in members if f.codim == 0), default=min(ids))
            incs = tuple(i for i in self.incidences if i.sub in ids)
            out.append((top, FaceComplex(f"{self.name}[{top}]", self.num_hyperfaces, tuple(members), incs)))
        return [c for _, c in sorted(out, key=lambda t: t[0])]


def _incidence_key(inc: Incidence):
    return (inc.sub, inc.super, -1 if inc.dropped_index is None else inc.dropped_index)


def _dropped(sub_set, super_set) -> int | None:
    if sub_set is None or super_set is None:
        return None
    extra = set(sub_set) - set(super_set)
    if not set(super_set) <= set(sub_set) or len(extra) != 1:
        return None
    if len(sub_set) != len(set(sub_set)) or len(super_set) != len(set(super_set)):
        return None
    return extra.pop()


def validate(X: FaceComplex, *, allow_disconnected: bool = False) -> ValidationReport:
    """Check the combinatorial axioms of embedded corners.

    Violations are returned, never raised.  The rules are: unique nonempty
    labels; strictly increasing index sets inside ``[1, n]``; exactly one
    codimension-0 face (at least one with ``allow_disconnected``);
    incidences join existing faces whose index sets differ by one element;
    every face of codimension ``p >= 1`` has exactly one super per index in
    its index set; and the diamond condition on pairs of indices.
    """
    out: list[Violation] = []

    def bad(rule, subject, message):
        out.append(Violation(rule, subject, message))

    n = X.num_hyperfaces
    if n < 0:
        bad("hyperfaces", X.name, f"num_hyperfaces must be >= 0, got {n}")

    seen: set[FaceId] = set()
    for f in X.faces:
        if not f.id:
            bad("label", repr(f.id), "face label must be a nonempty string")
        if f.id in seen:
            bad("label", f.id, f"duplicate face label {f.id}")
        seen.add(f.id)
        iset = f.index_set
        if any(a >= b for a, b in zip(iset, iset[1:])):
            bad("index_set", f.id, f"face {f.id} index set {list(iset)} is not strictly increasing")
        out_of_range = [i for i in iset if not 1 <= i <= n]
        if out_of_range:
            bad("index_set", f.id, f"face {f.id} index set has entries outside [1, {n}]: {out_of_range}")

    tops = [f.id for f in X.faces if f.codim == 0]
    if not tops:
        bad("connected", X.name, "no codimension-0 face")
    elif len(tops) > 1 and not allow_disconnected:
        bad("connected", X.name, f"expected exactly one codimension-0 face, found {len(tops)}: {sorted(tops)}")

    for inc in X.incidences:
        pair = f"({inc.sub}, {inc.super})"
        missing = [x for x in (inc.sub, inc.super) if x not in X]
        if missing:
            bad("incidence", pair, f"incidence {pair} names unknown face(s) {missing}")
            continue
        if inc.dropped_index is None:
            bad(
                "incidence",
                pair,
                f"incidence {pair}: I({inc.super}) is not I({inc.sub}) minus exactly one index",
            )

    for f in X.faces:
        if f.codim == 0:
            continue
        counts: dict[int, int] = defaultdict(int)
        for _, i in X._supers.get(f.id, ()):
            counts[i] += 1
        for i in sorted(set(f.index_set)):
            if counts[i] == 0:
                bad("exactly-one", f.id, f"face {f.id} missing super for dropped index {i}")
            elif counts[i] > 1:
                bad("exactly-one", f.id, f"face {f.id} has {counts[i]} supers for dropped index {i}")

    # only checkable where the two-step supers exist and are unique
    for f in X.faces:
        for i, j in combinations(sorted(set(f.index_set)), 2):
            try:
                a = X.super_along(X.super_along(f.id, i), j)
                b = X.super_along(X.super_along(f.id, j), i)
            except KeyError:
                continue
            if a != b:
                bad("diamond", f.id, f"diamond failure at ({f.id}, {i}, {j})")
    return ValidationReport(tuple(out))


def check(X: FaceComplex, *, allow_disconnected: bool = False) -> FaceComplex:
    """Return ``X`` unchanged or raise :class:`ValidationError`."""
    report = validate(X, allow_disconnected=allow_disconnected)
    if not report.ok:
        raise ValidationError(report)
    return X


_TOP_FIELDS = {"name", "num_hyperfaces", "faces", "incidences"}


def _expect(cond, message):
    if not cond:
        raise ComplexSyntaxError(message)


def parse_complex(text: str, *, allow_disconnected: bool = False) -> FaceComplex:
    """Parse and validate a face-complex JSON document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    X = complex_from_dict(doc)
    return check(X, allow_disconnected=allow_disconnected)


def complex_from_dict(doc) -> FaceComplex:
    """Schema-check a decoded document and build the (unvalidated) complex."""
    _expect(isinstance(doc, dict), "top level must be an object")
    unknown = set(doc) - _TOP_FIELDS
    _expect(not unknown, f"unknown field(s) {sorted(unknown)}")
    missing = _TOP_FIELDS - set(doc)
    _expect(not missing, f"missing field(s) {sorted(missing)}")
    _expect(isinstance(doc["name"], str), "name must be a string")
    _expect(_is_int(doc["num_hyperfaces"]), "num_hyperfaces must be an integer")
    _expect(isinstance(doc["faces"], list), "faces must be a list")
    _expect(isinstance(doc["incidences"], list), "incidences must be a list")
    faces = []
    for k, rec in enumerate(doc["faces"]):
        _expect(isinstance(rec, dict) and set(rec) == {"id", "index_set"},
                f"faces[{k}] must have exactly the fields id, index_set")
        _expect(isinstance(rec["id"], str), f"faces[{k}].id must be a string")
        iset = rec["index_set"]
        _expect(isinstance(iset, list) and all(_is_int(i) for i in iset),
                f"faces[{k}].index_set must be a list of integers")
        faces.append((rec["id"], iset))
    incs = []
    for k, rec in enumerate(doc["incidences"]):
        _expect(isinstance(rec, dict) and set(rec) == {"sub", "super"},
                f"incidences[{k}] must have exactly the fields sub, super")
        _expect(isinstance(rec["sub"], str) and isinstance(rec["super"], str),
                f"incidences[{k}] fields must be strings")
        incs.append((rec["sub"], rec["super"]))
    return FaceComplex.build(doc["name"], doc["num_hyperfaces"], faces, incs)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def complex_to_dict(X: FaceComplex) -> dict:
    return {
        "name": X.name,
        "num_hyperfaces": X.num_hyperfaces,
        "faces": [{"id": f.id, "index_set": list(f.index_set)} for f in X.faces],
        "incidences": [{"sub": i.sub, "super": i.super} for i in X.incidences],
    }


def serialize(X: FaceComplex) -> str:
    """Canonical JSON text; byte-identical for equal complexes."""
    return json.dumps(complex_to_dict(X), indent=2, ensure_ascii=False) + "\n"


def relabel(X: FaceComplex, mapping: Mapping[FaceId, FaceId], name: str | None = None) -> FaceComplex:
    """Rename faces; labels missing from ``mapping`` are kept."""
    new = lambda fid: mapping.get(fid, fid)  # noqa: E731
    faces = tuple(Face(new(f.id), f.index_set) for f in X.faces)
    incs = tuple(Incidence(new(i.sub), new(i.super), i.dropped_index) for i in X.incidences)
    return FaceComplex(X.name if name is None else name, X.num_hyperfaces, faces, incs)


def find_isomorphism(X: FaceComplex, Y: FaceComplex) -> dict[FaceId, FaceId] | None:
    """A label bijection X -> Y preserving index sets and incidences, if any.

    Hyperface numbering is held fixed.  Candidates are restricted to faces
    with equal index sets, then searched by backtracking, which is cheap for
    the small lattices this is used on.
    """
    if X.num_hyperfaces != Y.num_hyperfaces or len(X.faces) != len(Y.faces):
        return None
    by_set: dict[tuple[int, ...], list[FaceId]] = defaultdict(list)
    for g in Y.faces:
        by_set[g.index_set].append(g.id)
    order = [f.id for f in X.faces]
    x_sup = {f: set(X._supers.get(f, ())) for f in order}
    y_sup = {g.id: set(Y._supers.get(g.id, ())) for g in Y.faces}
    mapping: dict[FaceId, FaceId] = {}
    used: set[FaceId] = set()

    def consistent(f, g):
        # faces are ordered by codim, so every super of f is already mapped
        image = {(mapping[s], i) for s, i in x_sup[f]}
        return image == y_sup[g]

    def search(k):
        if k == len(order):
            return True
        f = order[k]
        for g in by_set.get(X.face(f).index_set, ()):
            if g in used or not consistent(f, g):
                continue
            mapping[f] = g
            used.add(g)
            if search(k + 1):
                return True
            del mapping[f]
            used.discard(g)
        return False

    if len(X.incidences) != len(Y.incidences):
        return None
    return dict(mapping) if search(0) else None
