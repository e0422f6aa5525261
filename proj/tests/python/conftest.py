import json
import pathlib

import pytest

import hsres

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def report():
    return hsres.run_suite()


@pytest.fixture(scope="session")
def schema():
    return json.loads((ROOT / "docs" / "report.schema.json").read_text())
