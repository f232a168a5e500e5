import sys
from pathlib import Path

import hypothesis
import pytest

sys.path.insert(0, str(Path(__file__).parent))

hypothesis.settings.register_profile("ci", deadline=None)
hypothesis.settings.load_profile("ci")


@pytest.fixture(scope="session")
def ko_resolution():
    from adamschart.fpmodule import preset_module
    from adamschart.resolve import minimal_resolution

    return minimal_resolution(preset_module("sphere/A(1)"), 8, 21)


@pytest.fixture(scope="session")
def ko_chart(ko_resolution):
    from adamschart.chart import chart_from_ext
    from adamschart.resolve import ext_table

    return chart_from_ext(ext_table(ko_resolution), source="ko")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({detail})")
