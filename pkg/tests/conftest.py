import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion, from pytest's verdicts."""
    module = sys.modules.get("test_acceptance")
    descriptions = getattr(module, "CRITERIA", None) if module else None
    if not descriptions:
        return
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            if getattr(report, "when", "call") not in ("call", None):
                continue
            name = getattr(report, "location", ("", 0, ""))[2]
            if not name.startswith("test_criterion_"):
                continue
            number = int(name.split("_")[2])
            outcomes[number] = "PASS" if status == "passed" else "FAIL"
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(descriptions):
        verdict = outcomes.get(number, "NOT RUN")
        terminalreporter.write_line(
            f"criterion {number:02d} {verdict}  {descriptions[number]}"
        )
