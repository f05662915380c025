"""Standard manifolds with corners and the product construction."""
from __future__ import annotations

from itertools import combinations

from .face_complex import Face, FaceComplex, Incidence


def point() -> FaceComplex:
    """A closed manifold: one face, no hyperfaces.  Unit for :func:`product`."""
    return FaceComplex.build("point", 0, [("pt", ())], [])


def interval() -> FaceComplex:
    return FaceComplex.build(
        "interval",
        2,
        [("interior", ()), ("left", (1,)), ("right", (2,))],
        [("left", "interior"), ("right", "interior")],
    )


def disk() -> FaceComplex:
    """Manifold with a single connected boundary hypersurface."""
    return FaceComplex.build("disk", 1, [("interior", ()), ("boundary", (1,))], [("boundary", "interior")])


def polygon(k: int) -> FaceComplex:
    """Convex ``k``-gon: edges ``e1..ek``; vertex ``vi`` joins edges ``i`` and ``i+1`` (mod k).

    ``k = 2`` gives the bigon, whose two vertices share the index set {1, 2}.
    """
    if k < 2:
        raise ValueError(f"polygon needs k >= 2, got {k}")
    faces = [("interior", ())]
    faces += [(f"e{i}", (i,)) for i in range(1, k + 1)]
    incs = [(f"e{i}", "interior") for i in range(1, k + 1)]
    for i in range(1, k + 1):
        j = i % k + 1
        faces.append((f"v{i}", tuple(sorted((i, j)))))
        incs += [(f"v{i}", f"e{i}"), (f"v{i}", f"e{j}")]
    return FaceComplex.build(f"polygon{k}", k, faces, incs)


def _subset_label(S) -> str:
    return "interior" if not S else "s" + "_".join(map(str, S))


def simplex(n: int) -> FaceComplex:
    """The ``n``-simplex: one face per proper subset of its ``n+1`` facets."""
    if n < 1:
        raise ValueError(f"simplex needs n >= 1, got {n}")
    idx = range(1, n + 2)
    faces, incs = [], []
    for size in range(n + 1):
        for S in combinations(idx, size):
            faces.append((_subset_label(S), S))
            for i in S:
                incs.append((_subset_label(S), _subset_label(tuple(x for x in S if x != i))))
    return FaceComplex.build(f"simplex{n}", n + 1, faces, incs)


def square() -> FaceComplex:
    """``product(interval(), interval())`` with labels interior, e1..e4, v13, v14, v23, v24.

    Edge ``ei`` is hyperface ``i``; vertex ``vij`` is the corner ``ei ∩ ej``.
    """
    faces = [("interior", ())] + [(f"e{i}", (i,)) for i in range(1, 5)]
    incs = [(f"e{i}", "interior") for i in range(1, 5)]
    for i in (1, 2):
        for j in (3, 4):
            faces.append((f"v{i}{j}", (i, j)))
            incs += [(f"v{i}{j}", f"e{i}"), (f"v{i}{j}", f"e{j}")]
    return FaceComplex.build("square", 4, faces, incs)


def product(X: FaceComplex, Y: FaceComplex) -> FaceComplex:
    """Cartesian product; Y's hyperfaces are renumbered after X's.

    The face ``(f, g)`` is labelled ``f*g``.  Should that collide, both
    factors are parenthesized instead.
    """
    shift = X.num_hyperfaces

    def label(f, g):
        return f"{f}*{g}"

    labels = {label(f.id, g.id) for f in X.faces for g in Y.faces}
    if len(labels) != len(X.faces) * len(Y.faces):
        def label(f, g):  # noqa: F811
            return f"({f})*({g})"

    faces = tuple(
        Face(label(f.id, g.id), f.index_set + tuple(i + shift for i in g.index_set))
        for f in X.faces
        for g in Y.faces
    )
    incs = []
    for inc in X.incidences:
        for g in Y.faces:
            incs.append(Incidence(label(inc.sub, g.id), label(inc.super, g.id), inc.dropped_index))
    for inc in Y.incidences:
        drop = None if inc.dropped_index is None else inc.dropped_index + shift
        for f in X.faces:
            incs.append(Incidence(label(f.id, inc.sub), label(f.id, inc.super), drop))
    return FaceComplex(f"{X.name}*{Y.name}", X.num_hyperfaces + Y.num_hyperfaces, faces, tuple(incs))


def hypercube(n: int) -> FaceComplex:
    if n < 1:
        raise ValueError(f"hypercube needs n >= 1, got {n}")
    X = interval()
    for _ in range(n - 1):
        X = product(X, interval())
    return FaceComplex(f"hypercube{n}", X.num_hyperfaces, X.faces, X.incidences)


def corpus() -> list[FaceComplex]:
    """The named builder outputs used as the golden test corpus."""
    out = [point(), interval(), disk(), square()]
    out += [polygon(k) for k in range(2, 7)]
    out += [simplex(n) for n in range(1, 4)]
    out += [hypercube(n) for n in range(1, 4)]
    return out
