import random

import pytest
from hypothesis import strategies as st

from neuralhoms.codes import Code
from neuralhoms.homs import VarImage, hom_validate
from neuralhoms.pseudo import Pseudomonomial

# --- shared generators -----------------------------------------------------


def random_images(rng: random.Random, n: int, m: int) -> list[str]:
    """Image strings of a uniformly built neural-ideal-preserving map."""
    sources = rng.sample(range(1, n + 1), m)
    images = [rng.choice("01") for _ in range(n)]
    for j, i in enumerate(sources, start=1):
        images[i - 1] = f"1-x{j}" if rng.random() < 0.5 else f"x{j}"
    return images


def random_hom(rng, n=None, m=None, max_n=8):
    n = n or rng.randint(1, max_n)
    m = m or rng.randint(1, n)
    images = random_images(rng, n, m)
    return hom_validate(n, m, images), images


def random_code(rng, n, density=None) -> Code:
    p = rng.random() if density is None else density
    return Code(n, frozenset(v for v in range(1 << n) if rng.random() < p))


def random_pm(rng, n) -> Pseudomonomial:
    sigma = tau = 0
    for k in range(n):
        r = rng.randrange(3)
        if r == 1:
            sigma |= 1 << k
        elif r == 2:
            tau |= 1 << k
    return Pseudomonomial(n, sigma, tau)


@st.composite
def codes(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    words = draw(st.sets(st.integers(0, (1 << n) - 1)))
    return Code(n, frozenset(words))


@st.composite
def pseudomonomials(draw, n=None, max_n=6):
    if n is None:
        n = draw(st.integers(1, max_n))
    digits = draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
    sigma = sum(1 << k for k, d in enumerate(digits) if d == 1)
    tau = sum(1 << k for k, d in enumerate(digits) if d == 2)
    return Pseudomonomial(n, sigma, tau)


@st.composite
def nip_homs(draw, n=None, max_n=6):
    if n is None:
        n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, n))
    sources = draw(st.permutations(range(1, n + 1)))[:m]
    images = [VarImage.one() if draw(st.booleans()) else VarImage.zero() for _ in range(n)]
    for j, i in enumerate(sources, start=1):
        images[i - 1] = VarImage.neg(j) if draw(st.booleans()) else VarImage.var(j)
    return hom_validate(n, m, images)


# --- acceptance summary ----------------------------------------------------

_ACCEPTANCE: dict[int, tuple[str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call" and not rep.failed:
        return
    number, title = marker.args
    entry = _ACCEPTANCE.setdefault(number, (title, []))
    entry[1].append("PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, results = _ACCEPTANCE[number]
        verdict = "PASS" if results and all(r == "PASS" for r in results) else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2} {verdict}  {title}")
