import copy

import pytest
import yaml

from src.config import DEFAULT_CONFIG
from src.geometry import LatticePoint


@pytest.fixture
def rectangle_3x4():
    return [LatticePoint(0, 0), LatticePoint(3, 0), LatticePoint(3, 4), LatticePoint(0, 4)]


@pytest.fixture
def light_config(tmp_path):
    """Default configuration with ledger bounds small enough for the test suite."""
    config = copy.deepcopy(DEFAULT_CONFIG)
    config['output']['reports_dir'] = str(tmp_path / "reports")
    config['logging']['level'] = "WARNING"
    ledger = config['ledger']
    ledger['searches']['nonexistence_radius'] = 10
    ledger['impossibility']['hypotenuse_limit'] = 200
    ledger['impossibility']['parity_limit'] = 500
    ledger['constructions']['max_k'] = 100
    ledger['properties']['isosceles_limit'] = 200
    ledger['properties']['pell_x_limit'] = 10000
    ledger['properties']['quadrilateral_radius'] = 8
    return config


@pytest.fixture
def config_file(tmp_path, light_config):
    path = tmp_path / "config.yaml"
    with open(path, 'w') as file:
        yaml.dump(light_config, file)
    return str(path)


@pytest.fixture(autouse=True)
def _isolated_environment(monkeypatch):
    monkeypatch.delenv("BIDIOPHANTINE_CONFIG", raising=False)
    monkeypatch.delenv("BIDIOPHANTINE_LOG_LEVEL", raising=False)
