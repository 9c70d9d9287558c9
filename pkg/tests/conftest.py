import re

_CRITERION = re.compile(r"test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Emit one PASS/FAIL checklist line per acceptance criterion."""
    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            m = _CRITERION.search(nodeid)
            if not m:
                continue
            if getattr(rep, "when", "call") != "call" and outcome == "passed":
                continue
            k = int(m.group(1))
            ok = outcome == "passed"
            results[k] = results.get(k, True) and ok
    if results:
        terminalreporter.write_line("")
        for k in sorted(results):
            verdict = "PASS" if results[k] else "FAIL"
            terminalreporter.write_line(f"CRITERION {k}: {verdict}")
