import pytest

from qbrauer.qarith import RootOfUnityContext

GOLDEN = [(2, 8), (3, 7), (3, 9), (4, 8), (-4, 8)]

_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(number: int, ok: bool, detail: str) -> None:
    _ACCEPTANCE[number] = (ok, detail)


@pytest.fixture(params=GOLDEN, ids=lambda c: f"N{c[0]}_l{c[1]}")
def golden(request):
    return RootOfUnityContext(*request.param)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
