import random

import pytest

from conormal import builders
from conormal.builders import product

BASE = [
    builders.point,
    builders.interval,
    builders.disk,
    builders.square,
    lambda: builders.polygon(2),
    lambda: builders.polygon(3),
    lambda: builders.polygon(5),
    lambda: builders.polygon(6),
    lambda: builders.simplex(2),
    lambda: builders.simplex(3),
]


def random_products(count, seed, max_faces=200, max_factors=3):
    """Seeded stream of products of 2..max_factors builder outputs."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.randint(2, max_factors)
        factors = [rng.choice(BASE)() for _ in range(k)]
        X = factors[0]
        for Y in factors[1:]:
            X = product(X, Y)
        if len(X.faces) <= max_faces:
            out.append(X)
    return out


def random_relabeling(X, rng):
    labels = [f.id for f in X.faces]
    fresh = [f"q{k}" for k in range(len(labels))]
    rng.shuffle(fresh)
    return dict(zip(labels, fresh))


@pytest.fixture(scope="session")
def corpus():
    return builders.corpus()


@pytest.fixture
def rng():
    return random.Random(20261016)


# one PASS/FAIL line per acceptance criterion in the terminal summary

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = next((m for m in _markers.get(report.nodeid, ())), None)
    if marker is None:
        return
    num, title = marker.args
    ok = report.passed
    prev = _acceptance.get(num, (title, True))
    _acceptance[num] = (title, prev[1] and ok)


_markers = {}


def pytest_collection_modifyitems(items):
    for item in items:
        marks = list(item.iter_markers("acceptance"))
        if marks:
            _markers[item.nodeid] = marks


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_acceptance):
        title, ok = _acceptance[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {title}")
