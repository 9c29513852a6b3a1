import pytest

from veronese.field import field_of_order


@pytest.fixture(scope="session")
def fields():
    return {q: field_of_order(q) for q in (2, 3, 4, 5, 7, 8, 9, 16)}
