from fractions import Fraction

import pytest

from orbifold_rr.documents import load_document

GOLDEN = ["cy_codim3", "cy_codim4", "cy_codim5"]


@pytest.fixture(scope="session")
def golden_docs():
    return {name: load_document(name) for name in GOLDEN}


@pytest.fixture(scope="session")
def golden_data(golden_docs):
    return {name: doc.polarized_data() for name, doc in golden_docs.items()}


@pytest.fixture
def F():
    return Fraction


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        title, status, detail = mod.RESULTS[n]
        line = f"criterion {n}: {status}  {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
