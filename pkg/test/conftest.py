import json
from pathlib import Path

import pytest

from utils.config import ToolkitConfig, configure

CASES_PATH = Path(__file__).parent / "graph_cases.json"


@pytest.fixture(autouse=True)
def default_config():
    """Каждый тест начинается и заканчивается с конфигурацией по умолчанию"""
    configure(ToolkitConfig())
    yield
    configure(ToolkitConfig())


@pytest.fixture(scope="session")
def graph_cases():
    with open(CASES_PATH, "r", encoding="utf-8") as f:
        return json.load(f)
