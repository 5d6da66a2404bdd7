import pytest

ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = []


@pytest.fixture
def acceptance(request):
    """Record one acceptance line: acceptance(label, ok, elapsed, limit, note)."""
    lines = request.config.stash[ACCEPTANCE_KEY]

    def record(label: str, ok: bool, elapsed: float, limit: float, note: str = "") -> None:
        verdict = "PASS" if ok and elapsed < limit else "FAIL"
        lines.append(f"{label}: {verdict} ({elapsed:.2f}s, limit {limit:g}s){' ' + note if note else ''}")

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def _brute_m():
    """Brute-force M on every even floor of the acceptance envelope, keyed by (p, k, s)."""
    from hookpath.diagram import v_vertex
    from hookpath.fibonacci import fib_bruteforce

    return {
        (p, k, s): {l: fib_bruteforce(v_vertex(p, k, s, l)) for l in range(p**k)}
        for p in (3, 5)
        for k in (0, 1, 2)
        for s in range(1, 5)
    }
