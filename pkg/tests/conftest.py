import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

# exact arithmetic on larger draws is slow but deterministic; no per-example deadline
settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for index, ok, detail, elapsed in sorted(module.RESULTS):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {index}: {detail} [{elapsed:.2f}s]")
    total = sum(r[3] for r in module.RESULTS)
    verdict = "PASS" if total < module.RUNTIME_BUDGET_SECONDS else "FAIL"
    terminalreporter.write_line(f"{verdict} runtime: {total:.1f}s (budget {module.RUNTIME_BUDGET_SECONDS:.0f}s)")
