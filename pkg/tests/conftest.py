import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", []))
            if "criterion" in props and rep.when == "call":
                lines.append((props["criterion"], rep.passed))
    if not lines:
        return
    lines.sort(key=lambda x: int(x[0].split()[0]))
    terminalreporter.section("acceptance criteria")
    for text, ok in lines:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {text}")
