"""
Runtime settings for semichain.

Search limits can be set in three places, later ones winning:

1. ~/.semichain.conf under `DEFAULT`
  [DEFAULT]
  size_cap = 50000
  max_subsemigroups = 500000
2. environment variables
  SEMICHAIN_SIZE_CAP=50000 semichain length --family T:6
3. the `config` dict handed to a graph (or the matching CLI flags)
"""

import configparser
import os
from typing import Any, Dict, Optional

from ..helpers.defaults import DEFAULT_CONFIG
from .logging import get_logger

DEFAULT_CONFIG_LOCATION = os.path.expanduser("~/.semichain.conf")

_INTEGER_KEYS = {
    "size_cap": "SEMICHAIN_SIZE_CAP",
    "threads": "SEMICHAIN_THREADS",
    "max_subsemigroups": "SEMICHAIN_MAX_SUBSEMIGROUPS",
    "max_millis": "SEMICHAIN_MAX_MILLIS",
}

_BUDGET_KEYS = {"max_subsemigroups", "max_millis"}

logger = get_logger(__name__)


def _load_config(config_location: str) -> configparser.ConfigParser:
    config = configparser.ConfigParser()
    try:
        with open(config_location, encoding="utf-8") as f:
            config.read_file(f)
    except OSError:
        config["DEFAULT"] = {}
    else:
        if "DEFAULT" not in config:
            config["DEFAULT"] = {}
    return config


def _read_overrides(
    config_obj: configparser.ConfigParser, environ: Dict[str, str]
) -> Dict[str, int]:
    overrides: Dict[str, int] = {}
    for key, env_name in _INTEGER_KEYS.items():
        raw = config_obj["DEFAULT"].get(key)
        if environ.get(env_name) is not None:
            raw = environ[env_name]
        if raw is None:
            continue
        try:
            value = int(raw)
        except ValueError as e:
            logger.debug(f"Unable to parse value for `{key}`. Encountered {e}")
            continue
        if value < 1:
            logger.debug(f"Ignoring non-positive value {value} for `{key}`")
            continue
        overrides[key] = value
    return overrides


def resolve_config(
    config: Optional[Dict[str, Any]] = None,
    config_location: str = DEFAULT_CONFIG_LOCATION,
    environ: Optional[Dict[str, str]] = None,
) -> Dict[str, Any]:
    """
    Merge defaults, file/environment overrides and an explicit config.

    Args:
        config (Optional[dict]): explicit settings; wins over everything else.
        config_location (str): path of the ini-style settings file.
        environ (Optional[dict]): environment mapping, `os.environ` by default.

    Returns:
        dict: a fresh configuration dict with a complete `budget` sub-dict.
    """
    environ = os.environ if environ is None else environ
    overrides = _read_overrides(_load_config(config_location), environ)

    merged = {**DEFAULT_CONFIG, "budget": dict(DEFAULT_CONFIG["budget"])}
    for key, value in overrides.items():
        if key in _BUDGET_KEYS:
            merged["budget"][key] = value
        else:
            merged[key] = value

    for key, value in (config or {}).items():
        if key == "budget" and isinstance(value, dict):
            merged["budget"].update(value)
        elif value is not None:
            merged[key] = value

    if merged.get("threads") is None:
        merged["threads"] = os.cpu_count() or 1
    merged["budget"].setdefault("threads", merged["threads"])
    return merged
