from collections import Counter
from itertools import product as cartesian

import pytest

from conormal import builders
from conormal.builders import hypercube, interval, point, polygon, product, simplex
from conormal.face_complex import find_isomorphism, validate
from conftest import BASE, random_products


def codim_counts(X):
    c = Counter(f.codim for f in X.faces)
    return [c[p] for p in range(X.codim + 1)]


def test_interval():
    X = interval()
    assert X.codim == 1 and len(X.faces) == 3
    assert len(X.faces_of_codim(1)) == 2
    assert validate(X).ok
    assert len(X.incidences) == 2


def test_disk():
    X = builders.disk()
    assert X.codim == 1 and X.num_hyperfaces == 1
    assert validate(X).ok


def test_polygon():
    assert len(polygon(4).faces) == 9
    bigon = polygon(2)
    assert [bigon.index_set(v) for v in bigon.faces_of_codim(2)] == [(1, 2), (1, 2)]
    assert polygon(5).index_set("v5") == (1, 5)
    assert find_isomorphism(polygon(3), simplex(2)) is not None
    with pytest.raises(ValueError):
        polygon(1)


def test_simplex():
    assert find_isomorphism(simplex(1), interval()) is not None
    assert len(simplex(3).faces) == 1 + 4 + 6 + 4
    assert codim_counts(simplex(3)) == [1, 4, 6, 4]
    assert validate(simplex(3)).ok
    with pytest.raises(ValueError):
        simplex(0)


def test_square_matches_product_lattice():
    # enumerate both lattices and match faces by index set
    P = product(interval(), interval())
    S = builders.square()
    assert sorted(f.index_set for f in P.faces) == sorted(f.index_set for f in S.faces)
    assert find_isomorphism(P, S) is not None


def test_product_with_point_is_identity():
    for make in BASE:
        X = make()
        assert find_isomorphism(product(X, point()), X) is not None
        assert find_isomorphism(product(point(), X), X) is not None


def test_hypercube():
    assert find_isomorphism(hypercube(1), interval()) is not None
    assert len(hypercube(2).faces) == 9
    assert len(hypercube(3).faces) == 27
    # cube: 1 interior, 6 facets, 12 edges, 8 vertices
    assert codim_counts(product(product(interval(), interval()), interval())) == [1, 6, 12, 8]
    assert codim_counts(hypercube(3)) == [1, 6, 12, 8]
    with pytest.raises(ValueError):
        hypercube(0)


def test_product_face_counts_convolve():
    for X, Y in cartesian([interval(), polygon(3), simplex(3), builders.disk()], repeat=2):
        P = product(X, Y)
        cx, cy = codim_counts(X), codim_counts(Y)
        for p in range(P.codim + 1):
            expect = sum(cx[i] * cy[p - i] for i in range(len(cx)) if 0 <= p - i < len(cy))
            assert len(P.faces_of_codim(p)) == expect
        assert P.num_hyperfaces == X.num_hyperfaces + Y.num_hyperfaces
        assert P.codim == X.codim + Y.codim


def test_product_associative():
    small = [interval(), builders.disk(), polygon(2), polygon(3), simplex(2)]
    for A, B, C in cartesian(small, repeat=3):
        left = product(product(A, B), C)
        right = product(A, product(B, C))
        assert find_isomorphism(left, right) is not None


def test_every_output_valid(corpus):
    for X in corpus + random_products(30, seed=3):
        assert validate(X).ok, (X.name, validate(X).messages())
