import random
from dataclasses import dataclass

import pytest

from hypersection.parse import parse_polynomial
from hypersection.polycore import Polynomial, monomials_of_degree


def P(text, order=None):
    if order is None:
        return parse_polynomial(text)
    return parse_polynomial(text, order=order)


def random_homogeneous(rng: random.Random, degree: int, max_terms: int = 3, coeff: int = 3) -> Polynomial:
    monos = monomials_of_degree(3, degree)
    k = rng.randint(1, min(max_terms, len(monos)))
    chosen = rng.sample(monos, k)
    terms = {m: rng.choice([c for c in range(-coeff, coeff + 1) if c]) for m in chosen}
    return Polynomial(terms)


@dataclass
class MembershipCase:
    f0: Polynomial
    f1: Polynomial
    f2: Polynomial
    h: Polynomial
    constructed_member: bool


def make_membership_suite(seed: int = 20261016, n: int = 120) -> list[MembershipCase]:
    """Homogeneous instances with degrees <= 6; every other case is built as an explicit combination."""
    rng = random.Random(seed)
    cases = []
    while len(cases) < n:
        d1, d2, r = rng.randint(1, 3), rng.randint(1, 3), rng.randint(2, 4)
        d0 = rng.randint(1, 6)
        f1, f2, h = (random_homogeneous(rng, d) for d in (d1, d2, r))
        if len(cases) % 2 == 0 and d0 >= min(d1, d2, r):
            f0 = Polynomial.zero()
            for g, dg in ((f1, d1), (f2, d2), (h, r)):
                if d0 >= dg:
                    f0 = f0 + random_homogeneous(rng, d0 - dg, max_terms=2) * g
            if f0.is_zero():
                continue
            cases.append(MembershipCase(f0, f1, f2, h, True))
        else:
            cases.append(MembershipCase(random_homogeneous(rng, d0), f1, f2, h, False))
    return cases


@pytest.fixture(scope="session")
def membership_suite():
    return make_membership_suite()


ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    state = {"name": request.node.name, "detail": ""}

    def describe(name, detail=""):
        state["name"], state["detail"] = name, detail

    yield describe
    failed = getattr(request.node, "_acceptance_failed", None)
    ACCEPTANCE_RESULTS.append((state["name"], not failed, state["detail"]))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item._acceptance_failed = rep.failed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f"  ({detail})" if detail else ""))
