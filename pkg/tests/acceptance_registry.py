"""Shared result store for the acceptance gate.

Each acceptance test records exactly one entry here; the terminal-summary
hook in conftest.py prints them after the run, so every criterion shows a
single pass/fail line in the pytest output regardless of capture settings.
"""

RESULTS: dict[int, tuple[bool, str]] = {}


def record(number: int, passed: bool, detail: str) -> None:
    RESULTS[number] = (passed, detail)


def lines() -> list[str]:
    out = []
    for number in sorted(RESULTS):
        passed, detail = RESULTS[number]
        word = "PASS" if passed else "FAIL"
        out.append(f"{word} criterion {number}: {detail}")
    return out
