import numpy as np
import pytest
from scipy.stats import unitary_group


def random_unitary(dim, seed):
    if dim == 1:
        return np.array([[np.exp(2j * np.pi * np.random.default_rng(seed).random())]])
    return unitary_group.rvs(dim, random_state=seed)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
