from __future__ import annotations

import pytest

import helpers


@pytest.fixture(scope="session")
def fixtures():
    return helpers.all_fixtures()


def _summary_lines() -> list[str]:
    res = helpers.ACCEPTANCE_RESULTS
    lines = []
    for n in range(1, 9):
        key = str(n)
        subs = sorted(k for k in res if k[:-1] == key and k[-1].isalpha())
        if key in res:
            desc, ok = res[key]
            lines.append(f"criterion {n} {'PASS' if ok else 'FAIL'}: {desc}")
        elif subs:
            ok = all(res[k][1] for k in subs)
            lines.append(f"criterion {n} {'PASS' if ok else 'FAIL'}: property suite "
                         f"({len(subs)} sub-checks)")
            for k in subs:
                desc, sub_ok = res[k]
                lines.append(f"    ({k[-1]}) {'PASS' if sub_ok else 'FAIL'}: {desc}")
        else:
            lines.append(f"criterion {n} NOT RUN")
    return lines


def pytest_terminal_summary(terminalreporter):
    if helpers.ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in _summary_lines():
            terminalreporter.write_line(line)
        if helpers.ACCEPTANCE_LINES:
            terminalreporter.write_line("notes:")
            for line in helpers.ACCEPTANCE_LINES:
                terminalreporter.write_line(line)
