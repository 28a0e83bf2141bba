import json
from pathlib import Path

import pytest

from utils.config import ToolkitConfig, get_tolerances, load_config
from utils.errors import (CapacityError, ConsistencyError, Graph6ParseError, InputError,
                          NumericalFailure)
from utils.logger import get_harness_logger, log_exception, setup_logging

REPO_CONFIG = Path(__file__).parent.parent / "config.yaml"


@pytest.fixture
def log_dir(tmp_path):
    setup_logging("INFO", str(tmp_path))
    yield tmp_path
    setup_logging("WARNING", None)


def test_repository_config_matches_defaults():
    assert load_config(REPO_CONFIG) == ToolkitConfig()


def test_overrides(tmp_path):
    path = tmp_path / "c.yaml"
    path.write_text("tolerances:\n  inequality_slack: 1.0e-5\njobs: 4\n", encoding="utf-8")
    config = load_config(path, {"log_level": "DEBUG", "log_dir": None})
    assert config.tolerances.inequality_slack == 1e-5
    assert config.tolerances.strict_margin == 1e-9
    assert config.jobs == 4
    assert config.log_level == "DEBUG"


@pytest.mark.parametrize("text", ["jobs: [1\n", "- 1\n", "unknown: 1\n", "jobs: 0\n"])
def test_invalid_config(tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(InputError):
        load_config(path)


def test_missing_config(tmp_path):
    with pytest.raises(InputError):
        load_config(tmp_path / "absent.yaml")


def test_default_tolerances():
    assert get_tolerances().inequality_slack == 1e-6
    assert get_tolerances().strict_margin == 1e-9


def test_exit_codes():
    assert InputError("x").exit_code == 2
    assert CapacityError("x").exit_code == 3
    assert NumericalFailure("x").exit_code == 3
    assert ConsistencyError("x").exit_code == 1


def test_parse_error_location():
    error = Graph6ParseError("truncated", 3).at_line(7)
    assert (error.offset, error.line) == (3, 7)
    assert str(error) == "graph6 parse error at line 7, byte offset 3: truncated"


def test_json_log_records(log_dir):
    logger = get_harness_logger()
    logger.log_check_failure("T8", "Dhc", 1.0, 2.0, "synthetic")
    log_exception(logger, CapacityError("budget exhausted"), "suite", graph6="Bw")
    records = [json.loads(line) for f in log_dir.glob("graph_energy_json_*.log")
               for line in f.read_text(encoding="utf-8").splitlines()]
    events = {r["event_type"]: r for r in records}
    assert events["check_failed"]["theorem_id"] == "T8"
    assert events["error"]["exception"]["type"] == "CapacityError"
    assert events["error"]["graph6"] == "Bw"
    assert any(f.name.startswith("errors_") for f in log_dir.iterdir())
