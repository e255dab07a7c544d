import pytest
from hypothesis import settings

from dicksonlab import make_field

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ODD_FIELDS = [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (5, 2), (3, 3)]


@pytest.fixture(params=ODD_FIELDS, ids=lambda pe: f"q{pe[0] ** pe[1]}")
def odd_field(request):
    return make_field(*request.param)


@pytest.fixture
def F3():
    return make_field(3)


@pytest.fixture
def F5():
    return make_field(5)


@pytest.fixture
def F9():
    return make_field(3, 2)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
