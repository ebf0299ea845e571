import pytest

from xhermite.core.families import FamilyParams

# families with published closed forms
PUBLISHED_PAIRS = [(2, 3), (2, 5), (2, 7), (4, 5), (4, 7)]


@pytest.fixture
def p23():
    return FamilyParams(2, 3)


@pytest.fixture
def p25():
    return FamilyParams(2, 5)


@pytest.fixture
def p47():
    return FamilyParams(4, 7)


@pytest.fixture(params=PUBLISHED_PAIRS, ids=lambda p: f"X{p[0]}{p[1]}")
def published_params(request):
    return FamilyParams(*request.param)
