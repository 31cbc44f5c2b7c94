ACCEPTANCE: dict[int, tuple[str, str]] = {}


def record_acceptance(number: int, title: str, status: str = "PASS") -> None:
    ACCEPTANCE[number] = (title, status)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, status = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d} [{status}] {title}")
