import time

SESSION_START = time.monotonic()


def session_elapsed() -> float:
    return time.monotonic() - SESSION_START


def pytest_terminal_summary(terminalreporter):
    terminalreporter.write_line(
        f"total wall-clock: {session_elapsed():.1f}s"
    )
