"""Shared fixtures"""

import pytest

from src.bootstrap import reset_bootstrap
from src.models.election_models import VotingRule
from src.utils.dependency_injection import container
from src.utils.error_handling import get_error_handler


@pytest.fixture(autouse=True)
def clean_state():
    """Every test starts with an empty container and fresh error counters"""
    yield
    reset_bootstrap()
    container.clear()
    get_error_handler().reset_statistics()


@pytest.fixture(params=list(VotingRule), ids=lambda rule: rule.short_name)
def any_rule(request) -> VotingRule:
    return request.param


@pytest.fixture
def config_dir(tmp_path):
    """An empty configuration directory; ConfigManager writes its defaults there"""
    path = tmp_path / "config"
    path.mkdir()
    return path


@pytest.fixture
def no_lab_env(monkeypatch):
    """Strip CONTROL_LAB_* overrides that may be set in the developer's shell"""
    for variable in ('CONTROL_LAB_TIMEOUT_SECS', 'CONTROL_LAB_JOBS',
                     'CONTROL_LAB_ORACLE_CAP', 'CONTROL_LAB_LOG_LEVEL'):
        monkeypatch.delenv(variable, raising=False)
    monkeypatch.setattr('src.utils.config_manager.load_dotenv', lambda *a, **kw: False)
