import os
from pathlib import Path

import numpy as np
import pytest

from sttrack.imageio import ImageSequence, load_path

FIXTURES = Path(__file__).parent / "fixtures"
SEED = int(os.environ.get("STTRACK_SEED", "2017"))


def load_fixture(name: str) -> ImageSequence:
    return load_path(FIXTURES / f"{name}.json")


def random_corpus(n: int, seed: int = SEED, max_frames: int = 4, max_side: int = 6):
    """Seeded random sequences with at most 4 frames on domains up to 6x6."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        frames = rng.integers(1, max_frames + 1)
        h, w = rng.integers(1, max_side + 1, size=2)
        density = rng.uniform(0.2, 0.8)
        out.append(ImageSequence.from_array(rng.random((frames, h, w)) < density))
    return out


@pytest.fixture(scope="session")
def corpus():
    return random_corpus(120)


@pytest.fixture
def fixture_seq():
    return load_fixture


_criteria: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and (report.when == "call" or report.failed):
        label = marker.args[0]
        if report.failed or label not in _criteria:
            _criteria[label] = "FAIL" if report.failed else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria):
        terminalreporter.write_line(f"{_criteria[label]}  {label}")
