"""
Configuration loader for the bidiophantine toolkit.
Handles loading, merging over defaults, and validating settings.
"""
import copy
import os
import yaml
import logging
from typing import Optional

from dotenv import load_dotenv

from src.exceptions import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(os.path.dirname(__file__)), "config", "config.yaml")

CONFIG_ENV_VAR = "BIDIOPHANTINE_CONFIG"
LOG_LEVEL_ENV_VAR = "BIDIOPHANTINE_LOG_LEVEL"

OUTPUT_FORMATS = ('json', 'csv')

DEFAULT_CONFIG = {
    'logging': {
        'level': 'INFO',
        'log_to_file': False,
        'log_dir': 'logs',
    },
    'search': {
        'jobs': 1,
        'triangle_radius': 60,
        'pair_limit': 1000000,
        'ngon_limit': 1000000,
    },
    'output': {
        'format': 'json',
        'save_reports': False,
        'reports_dir': 'reports',
    },
    'ledger': {
        'algebra': {
            'enabled': True,
            'pell_count': 6,
            'k4_limit': 25000,
        },
        'searches': {
            'enabled': True,
            'pair_limit': 1000000,
            'oracle_radius': 60,
            'nonexistence_radius': 30,
            'ngon_limit': 1000000,
            'quadrilateral_limit': 100,
        },
        'impossibility': {
            'enabled': True,
            'hypotenuse_limit': 1000,
            'parity_limit': 10000,
        },
        'constructions': {
            'enabled': True,
            'max_k': 1000,
        },
        'properties': {
            'enabled': True,
            'isosceles_limit': 10000,
            'cosine_members': 6,
            'pell_x_limit': 1000000,
            'quadrilateral_radius': 25,
        },
    },
}


def _merge(base: dict, override: Optional[dict]) -> dict:
    """Recursively merge ``override`` into a copy of ``base``."""
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(config_path: Optional[str] = None) -> Optional[dict]:
    """
    Load configuration from YAML file.

    Resolution order: the argument, the BIDIOPHANTINE_CONFIG environment variable
    (a ``.env`` file is honoured), then config/config.yaml. File values are merged
    over the built-in defaults.

    Args:
        config_path (str, optional): Path to the configuration file.

    Returns:
        dict: Configuration dictionary or None if loading fails.
    """
    load_dotenv()
    if not config_path:
        config_path = os.getenv(CONFIG_ENV_VAR)

    try:
        if config_path and not os.path.exists(config_path):
            create_default_config(config_path)
            logger.info(f"Created default configuration file at {config_path}")

        path = config_path or DEFAULT_CONFIG_PATH
        file_config = {}
        if os.path.exists(path):
            with open(path, 'r') as file:
                file_config = yaml.safe_load(file) or {}
        else:
            logger.debug(f"No configuration file at {path}; using defaults")

        config = _merge(DEFAULT_CONFIG, file_config)

        env_level = os.getenv(LOG_LEVEL_ENV_VAR)
        if env_level:
            config['logging']['level'] = env_level.upper()

        validate_config(config)
        return config

    except Exception as e:
        logger.error(f"Failed to load configuration from {config_path or DEFAULT_CONFIG_PATH}: {str(e)}")
        return None


def validate_config(config: dict) -> None:
    """
    Validate the configuration to ensure all required fields are present.

    Args:
        config (dict): Configuration dictionary to validate.

    Raises:
        ConfigError: If configuration is invalid.
    """
    if not isinstance(config, dict):
        raise ConfigError("Configuration must be a mapping")

    required_fields = [
        'search',
        'output',
        'ledger'
    ]

    for field in required_fields:
        if field not in config:
            raise ConfigError(f"Missing required configuration field: {field}")

    search = config['search']
    jobs = search.get('jobs', 1)
    if not isinstance(jobs, int) or jobs < 1:
        raise ConfigError(f"search.jobs must be a positive integer, got {jobs!r}")

    output = config['output']
    if output.get('format', 'json') not in OUTPUT_FORMATS:
        raise ConfigError(f"output.format must be one of {OUTPUT_FORMATS}, got {output.get('format')!r}")

    ledger = config['ledger']
    for name, settings in ledger.items():
        if not isinstance(settings, dict):
            raise ConfigError(f"Ledger section {name} must be a mapping")
        if not settings.get('enabled', False):
            logger.debug(f"Ledger check {name} is disabled.")


def create_default_config(config_path: str) -> None:
    """
    Create a default configuration file if none exists.

    Args:
        config_path (str): Path where the config file should be created.
    """
    directory = os.path.dirname(config_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(config_path, 'w') as file:
        yaml.dump(DEFAULT_CONFIG, file, default_flow_style=False, sort_keys=False)
