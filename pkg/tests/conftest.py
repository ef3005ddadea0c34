import pytest

from hanoilab.recurrences import HanoiSolver


@pytest.fixture(scope="session")
def solver():
    """One shared memoised session for the whole run."""
    return HanoiSolver()
