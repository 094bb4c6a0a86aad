import numpy as np
import pytest

from lbo import from_vector_pair


def random_light_cone_bivector(rng, scale=1.0):
    """Random isotropic bivector: equal-length axial and polar vectors."""
    a = rng.normal(size=3)
    b = rng.normal(size=3)
    b *= np.linalg.norm(a) / np.linalg.norm(b)
    return scale * from_vector_pair(a, b)


def random_degenerate_bivector(rng, scale=1.0):
    """Light-cone bivector with orthogonal vector pair, hence zero pfaffian."""
    a = rng.normal(size=3)
    b = np.cross(a, rng.normal(size=3))
    b *= np.linalg.norm(a) / np.linalg.norm(b)
    return scale * from_vector_pair(a, b)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


# Acceptance tests push one line per criterion here; the summary hook prints
# them after the run so the pass/fail ledger survives pytest's capture.
ACCEPTANCE_LINES = []


def record_criterion(name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    ACCEPTANCE_LINES.append(f"{status}  {name}{suffix}")
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
