# Config module for loading settings, the extra graph inventory, and environment overrides

import base64
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml
from dotenv import load_dotenv

from .errors import ConfigError
from .graph import Multigraph

logger = logging.getLogger(__name__)

ENV_PREFIX = "FOREST_HILBERT_"

DEFAULT_SETTINGS: Dict[str, Any] = {
    "max_forests": 10_000_000,
    "max_basis": 200_000,
    "max_subset_vertices": 16,
    "max_recursion_calls": 5_000_000,
    "memo_enabled": True,
    "rank_backend": "exact",
    "quotient_strategy": "dual",
    "modular_prime": 2_147_483_647,
    "extra_degrees": None,
    "t_values": [1, 2, 3],
    "permutations": 5,
    "seed": 20240101,
    "samples": None,
}

RANK_BACKENDS = ("exact", "modular")
QUOTIENT_STRATEGIES = ("dual", "macaulay")

# Settings whose value is a positive integer cap
_POSITIVE_INT_KEYS = (
    "max_forests",
    "max_basis",
    "max_subset_vertices",
    "max_recursion_calls",
    "modular_prime",
    "permutations",
)


class GraphEntry:
    """A named graph from the inventory."""

    def __init__(self, name: str, vertex_count: int, edges: List[Tuple[int, int]]):
        self.name = name
        self.vertex_count = vertex_count
        self.edges = edges

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "n": self.vertex_count,
            "edges": [list(e) for e in self.edges],
        }

    @staticmethod
    def from_dict(d: Dict[str, Any]) -> "GraphEntry":
        try:
            edges = [(int(a), int(b)) for a, b in d.get("edges", [])]
            return GraphEntry(
                name=str(d.get("name", "")),
                vertex_count=int(d["n"]),
                edges=edges,
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigError(f"Malformed graph entry {d!r}: {e}") from e

    def to_graph(self) -> Multigraph:
        return Multigraph(self.vertex_count, self.edges)


def _parse_env_value(key: str, raw: str) -> Any:
    """Convert an environment string to the type of the default setting."""
    default = DEFAULT_SETTINGS[key]
    raw = raw.strip()
    try:
        if isinstance(default, bool):
            return raw.lower() in ("1", "true", "yes", "on")
        if isinstance(default, list):
            return [int(part) for part in raw.split(",") if part.strip()]
        if isinstance(default, str):
            return raw
        if raw.lower() in ("", "none", "null"):
            return None
        return int(raw)
    except ValueError as e:
        raise ConfigError(f"{ENV_PREFIX}{key.upper()}={raw!r} is not valid: {e}") from e


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def validate_settings(settings: Dict[str, Any]) -> None:
    """Raise ConfigError on any value of the wrong type or outside its allowed range."""
    for key in _POSITIVE_INT_KEYS:
        value = settings.get(key)
        if not _is_int(value) or value <= 0:
            raise ConfigError(f"{key} must be a positive integer, got {value!r}")
    if not isinstance(settings.get("memo_enabled"), bool):
        raise ConfigError(f"memo_enabled must be true or false, got {settings.get('memo_enabled')!r}")
    if settings.get("rank_backend") not in RANK_BACKENDS:
        raise ConfigError(
            f"rank_backend must be one of {RANK_BACKENDS}, got {settings.get('rank_backend')!r}"
        )
    if settings.get("quotient_strategy") not in QUOTIENT_STRATEGIES:
        raise ConfigError(
            f"quotient_strategy must be one of {QUOTIENT_STRATEGIES}, got {settings.get('quotient_strategy')!r}"
        )
    t_values = settings.get("t_values")
    if not isinstance(t_values, list) or not t_values or any(not _is_int(t) or t < 1 for t in t_values):
        raise ConfigError(f"t_values must be a nonempty list of integers >= 1, got {t_values!r}")
    extra = settings.get("extra_degrees")
    if extra is not None and (not _is_int(extra) or extra < 0):
        raise ConfigError(f"extra_degrees must be null or a nonnegative integer, got {extra!r}")
    samples = settings.get("samples")
    if samples is not None and (not _is_int(samples) or samples < 1):
        raise ConfigError(f"samples must be null or a positive integer, got {samples!r}")
    if not _is_int(settings.get("seed")):
        raise ConfigError(f"seed must be an integer, got {settings.get('seed')!r}")


class Config:
    """Centralized configuration management."""

    def __init__(self, config_dir: Optional[Path] = None):
        self.project_root = Path(__file__).parent.parent.parent
        load_dotenv(self.project_root / ".env")
        if config_dir is None:
            env_dir = os.getenv(f"{ENV_PREFIX}CONFIG_DIR")
            config_dir = Path(env_dir) if env_dir else self.project_root / "configs" / "local"
        self.config_dir = config_dir
        self.settings: Dict[str, Any] = {}
        self.graphs: List[GraphEntry] = []
        self._load_all()

    def _load_all(self):
        """Load settings and the graph inventory."""
        self._load_settings()
        self._load_graphs()

    def _load_settings(self):
        """Merge defaults, settings.yaml, and environment overrides."""
        settings = dict(DEFAULT_SETTINGS)

        settings_file = self.config_dir / "settings.yaml"
        if settings_file.exists():
            try:
                with open(settings_file) as f:
                    loaded = yaml.safe_load(f) or {}
                unknown = set(loaded) - set(DEFAULT_SETTINGS)
                if unknown:
                    logger.warning("Ignoring unknown settings in %s: %s", settings_file, sorted(unknown))
                settings.update({k: v for k, v in loaded.items() if k in DEFAULT_SETTINGS})
            except (OSError, yaml.YAMLError, AttributeError) as e:
                logger.warning("Failed to load %s, using defaults: %s", settings_file, e)

        for key in DEFAULT_SETTINGS:
            if (raw := os.getenv(f"{ENV_PREFIX}{key.upper()}")) is not None:
                settings[key] = _parse_env_value(key, raw)

        validate_settings(settings)
        self.settings = settings

    def _load_graphs(self):
        """Load extra corpus graphs from env or file."""
        graph_list: List[Dict[str, Any]] = []

        if env_json := os.getenv(f"{ENV_PREFIX}CORPUS_JSON"):
            try:
                graph_list = json.loads(env_json).get("graphs", [])
            except (json.JSONDecodeError, AttributeError) as e:
                logger.warning("%sCORPUS_JSON is not valid JSON: %s", ENV_PREFIX, e)

        elif env_yaml_b64 := os.getenv(f"{ENV_PREFIX}CORPUS_YAML_B64"):
            try:
                yaml_str = base64.b64decode(env_yaml_b64).decode("utf-8")
                graph_list = (yaml.safe_load(yaml_str) or {}).get("graphs", [])
            except (ValueError, yaml.YAMLError, AttributeError) as e:
                logger.warning("%sCORPUS_YAML_B64 decode failed: %s", ENV_PREFIX, e)

        elif (corpus_file := self.config_dir / "corpus.yaml").exists():
            try:
                with open(corpus_file) as f:
                    graph_list = (yaml.safe_load(f) or {}).get("graphs", [])
            except (OSError, yaml.YAMLError, AttributeError) as e:
                logger.warning("Failed to load %s: %s", corpus_file, e)

        self.graphs = [GraphEntry.from_dict(d) for d in graph_list]

    def get(self, key: str) -> Any:
        """Get a setting."""
        if key not in self.settings:
            raise ConfigError(f"Unknown setting {key!r}")
        return self.settings[key]

    def override(self, **values: Any) -> "Config":
        """Apply in-process overrides (CLI flags); None values are skipped."""
        updated = dict(self.settings)
        for key, value in values.items():
            if key not in DEFAULT_SETTINGS:
                raise ConfigError(f"Unknown setting {key!r}")
            if value is not None:
                updated[key] = value
        validate_settings(updated)
        self.settings = updated
        return self

    def get_graphs(self) -> List[GraphEntry]:
        """Get inventory graphs."""
        return self.graphs


# Global config instance
_config_instance: Optional[Config] = None


def get_config() -> Config:
    """Get the global config instance (singleton)."""
    global _config_instance
    if _config_instance is None:
        _config_instance = Config()
    return _config_instance


def reset_config():
    """Drop the global config so the next get_config() reloads it."""
    global _config_instance
    _config_instance = None
