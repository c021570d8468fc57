def pytest_terminal_summary(terminalreporter, config):
    results = getattr(config, "acceptance_results", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, (title, ok, detail) in results.items():
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d} {title}")
        for line in detail.splitlines():
            terminalreporter.write_line("      " + line)
