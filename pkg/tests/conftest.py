import re

# acceptance criterion number -> list of (nodeid, outcome)
_AC = {}
_AC_RE = re.compile(r"test_ac(\d+)_")


def pytest_runtest_logreport(report):
    m = _AC_RE.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        outcome = "xfail" if hasattr(report, "wasxfail") else report.outcome
        _AC.setdefault(int(m.group(1)), []).append((report.nodeid, outcome))


def pytest_terminal_summary(terminalreporter):
    if not _AC:
        return
    from test_acceptance import TITLES

    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(_AC):
        results = _AC[k]
        ok = all(o == "passed" for _, o in results)
        line = f"AC{k:<2} {'PASS' if ok else 'FAIL'}  {TITLES.get(k, '')}"
        bad = [nid.split("::")[-1] + f" ({o})" for nid, o in results if o != "passed"]
        if bad:
            line += "  [" + ", ".join(bad) + "]"
        tr.write_line(line)
