import pytest

from h2origami.orbits import enumerate_coords


@pytest.fixture(scope="session")
def coords_by_n():
    """All H(2) coordinate tuples for 3 <= n <= 12, primitive or not."""
    return {n: enumerate_coords(n) for n in range(3, 13)}


ACCEPTANCE_LINES = pytest.StashKey[list]()


@pytest.fixture
def acceptance_report(request):
    """Record one PASS/FAIL line per acceptance criterion and assert on it."""
    lines = request.config.stash.setdefault(ACCEPTANCE_LINES, [])

    def report(criterion, passed, detail):
        line = f"criterion {criterion:>2}: {'PASS' if passed else 'FAIL'}  {detail}"
        lines.append(line)
        print(line)
        assert passed, line

    return report


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
