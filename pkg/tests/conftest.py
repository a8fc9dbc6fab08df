import sys
from fractions import Fraction
from pathlib import Path

import pytest

from hfa import Nthfa, Thfe

# Make the sibling support module importable regardless of invocation dir.
sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def m1() -> Nthfa:
    """Two states over {a}; evaluates λ to {1/10} and a to {1/2, 3/5, 9/10}."""
    return Nthfa(
        ["q0", "q1"],
        ["a"],
        {("q0", "a", "q1"): Thfe([Fraction(1, 2), Fraction(9, 10)])},
        "q0",
        {"q0": Thfe([Fraction(1, 10)]), "q1": Thfe([Fraction(3, 5), Fraction(1)])},
    )


@pytest.fixture
def n1() -> Nthfa:
    """Companion machine over {a} for binary constructions."""
    return Nthfa(
        ["p0", "p1"],
        ["a"],
        {
            ("p0", "a", "p0"): Thfe([Fraction(1, 4)]),
            ("p0", "a", "p1"): Thfe([Fraction(3, 4), Fraction(1)]),
        },
        "p0",
        {"p1": Thfe([Fraction(1, 2)])},
    )
