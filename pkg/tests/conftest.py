import shutil
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for oracles / helpers

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def fig1_path() -> Path:
    return FIXTURES / "fig1.tea"


@pytest.fixture(scope="session")
def ev_dir() -> Path:
    return FIXTURES / "ev"


@pytest.fixture()
def fig1_case(fig1_path):
    from tea_workbench import parse_file

    outcome = parse_file(fig1_path)
    assert outcome.case is not None, outcome.diagnostics
    return outcome.case


@pytest.fixture()
def store_root(tmp_path, ev_dir) -> Path:
    """Service store populated with the fixture evidence and datasets."""
    root = tmp_path / "store"
    (root / "cases").mkdir(parents=True)
    shutil.copytree(ev_dir, root / "evidence")
    (root / "datasets").mkdir()
    shutil.copy(ev_dir / "datasets" / "outcomes.csv", root / "datasets" / "outcomes.csv")
    return root
