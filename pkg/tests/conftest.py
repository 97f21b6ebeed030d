import os
import sys
import tempfile

# keep the character cache out of the working tree and cold at session start
os.environ["OPFLAB_CACHE_DIR"] = tempfile.mkdtemp(prefix="opflab-cache-")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
