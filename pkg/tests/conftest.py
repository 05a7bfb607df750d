from hypothesis import HealthCheck, settings

settings.register_profile(
    'default', deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile('default')

import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture(scope='session')
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section('acceptance criteria')
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(':'))):
            terminalreporter.write_line(line)
