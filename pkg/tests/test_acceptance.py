"""Acceptance criteria 1-8, one marked group per criterion.

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section of the terminal summary for one PASS/FAIL line per criterion.
"""
import json
import random
import time

import pytest
from jsonschema import Draft202012Validator

from conormal import builders, schemas
from conormal.builders import disk, hypercube, interval, polygon, product, simplex
from conormal.chain import Chain, boundary_matrix, boundary_of, conormal_complex
from conormal.cli import run
from conormal.face_complex import parse_complex, relabel, serialize
from conormal.homology import all_homology, betti_numbers, homology_group
from conormal.obstruction import (
    IndexAssignment,
    Status,
    boundary_touched_faces,
    corner_cycle_faces,
    decide_sfp,
    decide_sfp_on,
)
from conormal.zlinalg import IntMatrix, snf
from conftest import BASE, random_products, random_relabeling
from oracles import homology_oracle, rank_q

SQ = builders.square()


def presentation_table(K):
    return [(H.free_rank, H.invariant_factors) for H in all_homology(K)]


def oracle_table(X):
    K = conormal_complex(X)
    dims = [K.rank(p) for p in range(K.top + 1)]
    return homology_oracle(dims, [K.boundary(p).tolist() for p in range(1, K.top + 1)])


# 1 ---------------------------------------------------------------------------

@pytest.mark.acceptance(1, "delta squared is zero on builders and 100 random products, under 10 s")
def test_delta_squared():
    start = time.perf_counter()
    complexes = builders.corpus() + [hypercube(4)] + random_products(100, seed=1)
    assert len(complexes) >= 100 + len(builders.corpus())
    for X in complexes:
        for p in range(2, X.codim + 1):
            assert (boundary_matrix(X, p - 1) @ boundary_matrix(X, p)).is_zero(), (X.name, p)
    assert time.perf_counter() - start < 10


# 2 ---------------------------------------------------------------------------

Z, ZERO = (1, ()), (0, ())
GOLDEN = [
    (interval(), [ZERO, Z]),
    (disk(), [ZERO, ZERO]),
    (SQ, [ZERO, ZERO, Z]),
    (product(interval(), interval()), [ZERO, ZERO, Z]),
    (simplex(3), [ZERO, ZERO, ZERO, Z]),
    (hypercube(3), [ZERO, ZERO, ZERO, Z]),
] + [(polygon(k), [ZERO, ZERO, Z]) for k in range(2, 7)]


@pytest.mark.acceptance(2, "golden homology table, confirmed by an independent oracle")
@pytest.mark.parametrize("X,expected", GOLDEN, ids=[X.name for X, _ in GOLDEN])
def test_golden_table(X, expected):
    assert presentation_table(X) == expected
    assert oracle_table(X) == [(rank, True) for rank, _ in expected]


# 3 ---------------------------------------------------------------------------

@pytest.mark.acceptance(3, "SNF contract on 500 random matrices against a rational-rank oracle, under 30 s")
def test_snf_contract():
    rng = random.Random(3)
    start = time.perf_counter()
    for _ in range(500):
        m, n = rng.randint(1, 8), rng.randint(1, 8)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        M = IntMatrix(rows, m, n)
        res = snf(M)
        assert res.U @ M @ res.V == res.S
        assert abs(res.U.det()) == 1 and abs(res.V.det()) == 1
        assert all(res.S[i, j] == 0 for i in range(m) for j in range(n) if i != j)
        diag = res.diagonal
        r = sum(1 for d in diag if d)
        assert all(d > 0 for d in diag[:r]) and not any(diag[r:])
        assert all(diag[k + 1] % diag[k] == 0 for k in range(r - 1))
        assert r == rank_q(rows)
    assert time.perf_counter() - start < 30


# 4 ---------------------------------------------------------------------------

@pytest.mark.acceptance(4, "H_1 torsion-free corpus-wide; rational Kunneth on 50 products")
def test_h1_torsion_free():
    for X in builders.corpus() + random_products(30, seed=40):
        if X.codim >= 1:
            assert homology_group(X, 1).invariant_factors == (), X.name


@pytest.mark.acceptance(4, "H_1 torsion-free corpus-wide; rational Kunneth on 50 products")
def test_kunneth():
    rng = random.Random(41)
    done = 0
    while done < 50:
        X, Y = rng.choice(BASE)(), rng.choice(BASE)()
        if len(X.faces) * len(Y.faces) > 200:
            continue
        bx, by, bp = betti_numbers(X), betti_numbers(Y), betti_numbers(product(X, Y))
        assert len(bp) == len(bx) + len(by) - 1
        for p in range(len(bp)):
            assert bp[p] == sum(bx[i] * by[p - i] for i in range(len(bx)) if 0 <= p - i < len(by))
        done += 1


# 5 ---------------------------------------------------------------------------

@pytest.mark.acceptance(5, "corner-cycle and boundary-touched face sets")
def test_corner_cycle_sets():
    assert corner_cycle_faces(SQ, 2) == SQ.faces_of_codim(2) == ["v13", "v14", "v23", "v24"]
    assert corner_cycle_faces(disk(), 1) == []
    X = hypercube(3)
    assert boundary_touched_faces(X, 2) == X.faces_of_codim(2)
    assert len(X.faces_of_codim(2)) == 12
    for Y in builders.corpus() + random_products(20, seed=5, max_faces=120):
        for p in range(1, Y.codim + 1):
            assert set(boundary_touched_faces(Y, p)) <= set(corner_cycle_faces(Y, p))


# 6 ---------------------------------------------------------------------------

@pytest.mark.acceptance(6, "SFP verdicts on the square and on hypercube(3) boundaries")
def test_sfp_square():
    v = decide_sfp(SQ, IndexAssignment(2, {"v13": 1, "v14": -1, "v23": -1, "v24": 1}))
    assert v.status is Status.SFP_FAILS
    assert v.class_coordinates.free in ((1,), (-1,)) and v.class_coordinates.torsion == ()
    v = decide_sfp(SQ, IndexAssignment(2, {f: 0 for f in SQ.faces_of_codim(2)}))
    assert v.status is Status.SFP_HOLDS


@pytest.mark.acceptance(6, "SFP verdicts on the square and on hypercube(3) boundaries")
def test_sfp_cube_trials():
    rng = random.Random(6)
    X = hypercube(3)
    vertices = X.faces_of_codim(3)
    for _ in range(20):
        a = Chain(3, {f: rng.randint(-5, 5) for f in rng.sample(vertices, rng.randint(1, len(vertices)))})
        c = boundary_of(X, a)
        v = decide_sfp(X, IndexAssignment(2, c.coeffs))
        assert v.status is Status.SFP_HOLDS
        assert boundary_of(X, v.witness) == c


# 7 ---------------------------------------------------------------------------

def probe_chains(X, rng):
    """Degree-2 chains with a spread of verdicts: zero, a generator, a boundary, junk."""
    faces = X.faces_of_codim(2)
    out = [Chain.zero(2), Chain(2, {f: rng.randint(-3, 3) for f in faces})]
    out += list(homology_group(X, 2).free_generators)
    if X.codim >= 3:
        out.append(boundary_of(X, Chain(3, {f: rng.randint(-3, 3) for f in X.faces_of_codim(3)})))
    return out


@pytest.mark.acceptance(7, "homology and SFP verdicts invariant under relabeling and sign flips")
@pytest.mark.parametrize("X", builders.corpus(), ids=[X.name for X in builders.corpus()])
def test_invariance(X):
    rng = random.Random(X.name)
    K = conormal_complex(X)
    base = presentation_table(K)
    decidable = 2 <= X.codim <= 3
    probes = probe_chains(X, rng) if decidable else []
    verdicts = [decide_sfp_on(K, c).status for c in probes]
    for _ in range(10):
        mapping = random_relabeling(X, rng)
        Y = relabel(X, mapping)
        assert presentation_table(Y) == base
        signs = {f.id: rng.choice((1, -1)) for f in X.faces}
        KF = K.flipped(signs)
        assert presentation_table(KF) == base
        for c, status in zip(probes, verdicts):
            moved = IndexAssignment(2, {mapping[f]: n for f, n in c.coeffs.items()})
            assert decide_sfp(Y, moved).status is status
            flipped = Chain(2, {f: signs[f] * n for f, n in c.coeffs.items()})
            assert decide_sfp_on(KF, flipped).status is status
    if X.codim == 1:
        assert decide_sfp(X, IndexAssignment(2, {})).status is Status.TRIVIALLY_HOLDS


# 8 ---------------------------------------------------------------------------

BUILD_ARGS = [["point"], ["interval"], ["disk"], ["square"], ["polygon", "4"], ["simplex", "3"], ["hypercube", "3"]]


def valid(schema, text):
    Draft202012Validator(schema).validate(json.loads(text))


@pytest.mark.acceptance(8, "CLI round-trip, schema-valid JSON, exit codes")
@pytest.mark.parametrize("argv", BUILD_ARGS, ids=[a[0] for a in BUILD_ARGS])
def test_cli_round_trip(tmp_path, argv):
    out = tmp_path / "x.json"
    assert run(["build", *argv, "-o", str(out)]).exit_code == 0
    text = out.read_text()
    valid(schemas.COMPLEX, text)
    assert serialize(parse_complex(text)) == text
    assert run(["build", *argv]).report == text
    assert run(["validate", str(out)]).exit_code == 0
    for cmd in (["validate", "--json"], ["homology", "--json", "--periodic", "--dump-matrices"]):
        first = run([cmd[0], str(out), *cmd[1:]])
        assert first.exit_code == 0
        assert run([cmd[0], str(out), *cmd[1:]]).report == first.report
    valid(schemas.VALIDATION, run(["validate", str(out), "--json"]).report)
    valid(schemas.HOMOLOGY, run(["homology", str(out), "--json", "--periodic", "--dump-matrices"]).report)
    X = parse_complex(text)
    if X.codim >= 1:
        valid(schemas.FACES, run(["faces", str(out), "-p", "1", "--cycles", "--json"]).report)


@pytest.mark.acceptance(8, "CLI round-trip, schema-valid JSON, exit codes")
def test_cli_exit_codes(tmp_path):
    sq = tmp_path / "square.json"
    run(["build", "square", "-o", str(sq)])
    zero = tmp_path / "zero.json"
    zero.write_text('{"degree": 2, "values": {}}')
    gen = tmp_path / "gen.json"
    gen.write_text('{"degree": 2, "values": {"v13": 1, "v14": -1, "v23": -1, "v24": 1}}')
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x", "num_hyperfaces": 0, "faces": [], "incidences": []}')

    r = run(["obstruction", str(sq), "--indices", str(zero), "--json"])
    assert r.exit_code == 0
    valid(schemas.VERDICT, r.report)
    assert json.loads(r.report)["status"] == "SFP_HOLDS"
    r = run(["obstruction", str(sq), "--indices", str(gen), "--json"])
    assert r.exit_code == 1
    valid(schemas.VERDICT, r.report)
    assert run(["validate", str(bad)]).exit_code == 1
    assert run(["frobnicate"]).exit_code == 2
    assert run(["homology", str(tmp_path / "missing.json")]).exit_code == 2
    assert run(["obstruction", str(sq), "--indices", str(bad)]).exit_code == 2
