import pathlib
import random

import pytest

from shirshov import Polynomial, RuleSet, parse_polynomial, parse_presentation

DATA = pathlib.Path(__file__).parent / "data"


def load(name: str) -> RuleSet:
    return parse_presentation((DATA / name).read_text())


@pytest.fixture(scope="session")
def jacobson() -> RuleSet:
    return load("jacobson.pres")


@pytest.fixture(scope="session")
def P(jacobson):
    """Parse an expression over a, b, c."""
    return lambda text: parse_polynomial(text, jacobson)


def random_poly(rng: random.Random, ngens: int, max_degree: int, max_terms: int = 6,
                coeff: int = 5) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        w = tuple(rng.randrange(ngens) for _ in range(d))
        terms[w] = rng.randint(-coeff, coeff)
    return Polynomial(terms)


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    _criteria[number] = (title, call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {title}")
