"""Test configuration and fixtures for curvefree tests."""

import shutil
import tempfile
from pathlib import Path

import pytest

from curvefree.core.models import WeakCombinatorics
from curvefree.core.polyring import parse
from curvefree.validator import load_arrangement

FIXTURES_DIR = Path(__file__).parent.parent / "src" / "curvefree" / "fixtures"

# Conic and six lines: 12 double, 3 triple and 1 quadruple point
CONIC_SIX_LINES = [
    "-24*x^2-23*y^2+76*y*z+195*z^2",
    "y-3*x-5*z",
    "y+3*x-5*z",
    "y+z",
    "y-3*z",
    "x",
    "x+y+z",
]

# Free conic-line arrangement of degree 11 with exponents (4, 6)
CONIC_NINE_LINES = [
    "x",
    "y",
    "x-z",
    "x+z",
    "y-z",
    "y+z",
    "y-x-z",
    "y-x+z",
    "y-x",
    "-x^2+x*y-y^2+z^2",
]

SIX_LINES = ["x", "y", "x+y+z", "x+y+2*z", "x+3*y+z", "5*x+y+z"]

FOUR_CONICS = ["x*y-z^2", "x*y+z^2", "x^2+y^2-2*z^2", "x^2+y^2+2*z^2"]

THREE_CONICS = ["y^2-x*z", "y^2-x*z+3*y*z", "3*x^2+7*y^2-9*x*y+2*x*z-3*y*z"]

BRAID = ["x", "y", "z", "x-y", "x-z", "y-z"]

# Degree >= 8: the Hilbert function window needs large exact ranks
SLOW_FIXTURES = {"conic_nine_lines", "conic_six_lines", "four_conics_tacnodes"}


def polys(texts):
    return [parse(text) for text in texts]


def fixture_params():
    """One pytest param per packaged fixture, marked slow from degree 8 on."""
    params = []
    for path in sorted(FIXTURES_DIR.glob("*.arr")):
        marks = [pytest.mark.slow] if path.stem in SLOW_FIXTURES else []
        params.append(pytest.param(path, marks=marks, id=path.stem))
    return params


def fixture_components(path):
    return polys(load_arrangement(path).components)


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    tmpdir = tempfile.mkdtemp()
    yield Path(tmpdir)
    shutil.rmtree(tmpdir)


@pytest.fixture
def fixtures_dir():
    """Directory holding the packaged arrangement fixtures."""
    return FIXTURES_DIR


@pytest.fixture
def sample_config():
    """Analyzer configuration matching the command-line defaults."""
    return {
        "seed": 0,
        "max_degree": 16,
        "format": "text",
        "skip_singlocus": False,
        "fixtures_dir": None,
        "max_shear_retries": 16,
    }


@pytest.fixture
def conic_six_lines_w():
    """Weak combinatorics (6,1; 12,3,1)."""
    return WeakCombinatorics.of(k=(6, 1), n=(12, 3, 1))


@pytest.fixture
def conic_nine_lines_w():
    """Weak combinatorics (9,1; 6,4,6)."""
    return WeakCombinatorics.of(k=(9, 1), n=(6, 4, 6))


@pytest.fixture
def three_conics_w():
    """Three conics, one ordinary triple point and three A5 points."""
    return WeakCombinatorics.of(k=(0, 3), n=(0, 1), t5=3)


@pytest.fixture
def arrangement_text():
    """A small valid arrangement file."""
    return """# near pencil
name: near pencil
component: x
component: y
component: z
component: x-y
expect_tau: 7
expect_exponents: 1, 2
expect_W: 4; 3,1
"""


@pytest.fixture
def arrangement_file(temp_dir, arrangement_text):
    path = temp_dir / "near_pencil.arr"
    path.write_text(arrangement_text, encoding="utf-8")
    return path
