import pytest

from basis.oracle import planar_oracle_table


@pytest.fixture(scope='session')
def planar_basis_5():
    """The oracle P table to n = 5."""
    return planar_oracle_table(5)


@pytest.fixture(scope='session')
def planar_basis_7():
    """The oracle P table to n = 7."""
    return planar_oracle_table(7)
