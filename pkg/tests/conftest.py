import pytest

from twosquare_gaps import richards_construction


@pytest.fixture(scope="session")
def richards10():
    return richards_construction(10)


@pytest.fixture(scope="session")
def richards20():
    return richards_construction(20)


@pytest.fixture(scope="session")
def richards_sweep():
    # shared by the acceptance sweeps; building all of them takes under a second
    return [richards_construction(y) for y in range(1, 501)]
