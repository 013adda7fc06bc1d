import pytest

from dirac_lamb import HYDROGEN, BetheTable, parse_state

TABLE_LABELS = ("1s1/2", "2s1/2", "2p1/2", "2p3/2")


@pytest.fixture
def hydrogen():
    return HYDROGEN


@pytest.fixture
def bethe():
    return BetheTable.default()


@pytest.fixture(params=TABLE_LABELS)
def table_state(request):
    return parse_state(request.param)
