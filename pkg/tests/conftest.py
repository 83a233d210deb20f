import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

from adjfactor.ring import QQ, ZZ, Zmod  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

NUMERIC_RINGS = [ZZ, QQ, Zmod(97), Zmod(6), Zmod(2)]


@pytest.fixture(params=NUMERIC_RINGS, ids=str)
def numeric_ring(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
