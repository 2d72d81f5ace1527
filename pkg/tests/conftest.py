import pytest

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def small():
    from emvkit import Budget
    return Budget(max_denom_exp=3, max_denom=6, max_set=3, lex_bound=8, max_support=2,
                  quad_bound=6, samples=1500)
