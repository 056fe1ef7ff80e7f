from spechtb.kernels import BACKEND

# acceptance results, filled by test_acceptance.py: number -> (passed, seconds, title)
ACCEPTANCE: dict = {}


def pytest_report_header(config):
    return f"spechtb kernels: {BACKEND}"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, seconds, title = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  ({seconds:.2f}s)  {title}")
