from __future__ import annotations

import pytest

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(number: int, passed: bool, detail: str) -> None:
    """Store one acceptance verdict and echo it (visible with -s)."""
    ACCEPTANCE[number] = (passed, detail)
    print(_line(number, passed, detail))


def _line(number: int, passed: bool, detail: str) -> str:
    return f"{'PASS' if passed else 'FAIL'} criterion {number:2d}: {detail}"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        terminalreporter.write_line(_line(number, *ACCEPTANCE[number]))


@pytest.fixture(scope="session")
def convolution_outputs():
    """MC_{-1}(f_* L_chi) for every character of exact order 2..15."""
    from cayleymc.convolution import characters_of_exact_order, induced_pushforward, middle_convolve

    return {chi: middle_convolve(induced_pushforward(chi))
            for m in range(2, 16) for chi in characters_of_exact_order(m)}
