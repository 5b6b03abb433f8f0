from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from roughcayley import make_cyclic, make_dihedral  # noqa: E402


@pytest.fixture(scope="session")
def z8():
    return make_cyclic(8)


@pytest.fixture(scope="session")
def d3():
    return make_dihedral(3)


@pytest.fixture(scope="session")
def d4():
    return make_dihedral(4)


@pytest.fixture(scope="session")
def klein():
    return make_dihedral(2)


SMALL_SPECS = [f"cyclic:{n}" for n in range(1, 9)] + [f"dihedral:{n}" for n in range(1, 5)]


def build(spec: str):
    family, n = spec.split(":")
    return make_cyclic(int(n)) if family == "cyclic" else make_dihedral(int(n))


@pytest.fixture(params=SMALL_SPECS, scope="session")
def small_group(request):
    return build(request.param)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
