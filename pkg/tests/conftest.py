def pytest_terminal_summary(terminalreporter):
    acceptance = None
    for mod in list(__import__("sys").modules.values()):
        if getattr(mod, "__name__", "").endswith("test_acceptance") and hasattr(mod, "RESULTS"):
            acceptance = mod
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.result_line(number))
