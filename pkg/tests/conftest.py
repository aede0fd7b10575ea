import pytest

from khovlap import iter_bundled_table, parse_pd

# right-handed trefoil: all three crossings positive
TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"


@pytest.fixture(scope="session")
def trefoil():
    return parse_pd(TREFOIL)


@pytest.fixture(scope="session")
def figure_eight():
    return parse_pd(FIGURE_EIGHT)


@pytest.fixture(scope="session")
def knot_table():
    return dict(iter_bundled_table())
