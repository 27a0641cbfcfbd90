import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from aldp import GrayImage

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

GOLDEN = Path(__file__).parent / "golden" / "fixtures.json"

_acceptance_key = pytest.StashKey[list]()


@st.composite
def gray_images(draw, min_side=3, max_side=10, max_value=255):
    rows = draw(st.integers(min_side, max_side))
    cols = draw(st.integers(min_side, max_side))
    pixels = draw(st.lists(st.integers(0, max_value), min_size=rows * cols, max_size=rows * cols))
    return GrayImage(rows, cols, tuple(pixels))


@pytest.fixture(scope="session")
def golden():
    data = json.loads(GOLDEN.read_text())
    for entry in data.values():
        entry["image"] = GrayImage.from_rows(entry["pixels"])
    return data


def pytest_configure(config):
    config.stash[_acceptance_key] = []


@pytest.fixture
def record_criterion(request):
    """Log one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def record(number, name, passed, detail=""):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {name}" + (f" -- {detail}" if detail else "")
        request.config.stash[_acceptance_key].append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_acceptance_key, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def quick_timing(monkeypatch):
    """Shrink the timing batch target; for tests that only check report structure."""
    from aldp import bench

    monkeypatch.setattr(bench, "MIN_BATCH_S", 0.001)
