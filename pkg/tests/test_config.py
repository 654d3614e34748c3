# Unit tests for configuration loading and overrides

import base64
import json
import logging

import pytest
import yaml

from src.forest_hilbert.config import DEFAULT_SETTINGS, Config, GraphEntry, get_config, reset_config
from src.forest_hilbert.corpus import load_corpus
from src.forest_hilbert.errors import ConfigError
from src.forest_hilbert.graph import Multigraph

CORPUS = {"graphs": [{"name": "bowtie", "n": 5, "edges": [[0, 1], [1, 2], [0, 2], [2, 3], [3, 4], [2, 4]]}]}


def test_defaults(isolated_config):
    """Test that an empty config directory yields the defaults."""
    config = get_config()
    assert config.config_dir == isolated_config
    assert config.settings == DEFAULT_SETTINGS
    assert config.get_graphs() == []


def test_settings_file(isolated_config):
    """Test that settings.yaml overrides defaults and unknown keys are ignored."""
    (isolated_config / "settings.yaml").write_text(
        yaml.safe_dump({"max_forests": 50, "rank_backend": "modular", "colour": "blue"})
    )
    config = get_config()
    assert config.get("max_forests") == 50
    assert config.get("rank_backend") == "modular"
    assert config.get("max_basis") == DEFAULT_SETTINGS["max_basis"]


def test_malformed_settings_file(isolated_config, caplog):
    """Test that an unreadable settings file falls back to defaults with a warning."""
    (isolated_config / "settings.yaml").write_text("max_forests: [unclosed\n")
    with caplog.at_level(logging.WARNING):
        config = get_config()
    assert config.get("max_forests") == DEFAULT_SETTINGS["max_forests"]
    assert "Failed to load" in caplog.text


def test_env_overrides(monkeypatch):
    """Test that FOREST_HILBERT_* variables override settings with the default's type."""
    monkeypatch.setenv("FOREST_HILBERT_MAX_FORESTS", "7")
    monkeypatch.setenv("FOREST_HILBERT_T_VALUES", "1,4")
    monkeypatch.setenv("FOREST_HILBERT_MEMO_ENABLED", "false")
    monkeypatch.setenv("FOREST_HILBERT_QUOTIENT_STRATEGY", "macaulay")
    config = Config()
    assert config.get("max_forests") == 7
    assert config.get("t_values") == [1, 4]
    assert config.get("memo_enabled") is False
    assert config.get("quotient_strategy") == "macaulay"


@pytest.mark.parametrize(
    "key,value",
    [
        ("RANK_BACKEND", "float"),
        ("QUOTIENT_STRATEGY", "groebner"),
        ("MAX_BASIS", "0"),
        ("MAX_FORESTS", "many"),
        ("T_VALUES", "0,1"),
    ],
)
def test_invalid_env_values(monkeypatch, key, value):
    """Test that invalid values raise ConfigError."""
    monkeypatch.setenv(f"FOREST_HILBERT_{key}", value)
    with pytest.raises(ConfigError):
        Config()


def test_override():
    """Test in-process overrides: None is skipped, unknown keys and bad values raise."""
    config = get_config()
    config.override(max_forests=12, max_basis=None)
    assert config.get("max_forests") == 12
    assert config.get("max_basis") == DEFAULT_SETTINGS["max_basis"]
    with pytest.raises(ConfigError):
        config.override(no_such_setting=1)
    with pytest.raises(ConfigError):
        config.override(max_forests=-1)
    assert config.get("max_forests") == 12
    with pytest.raises(ConfigError):
        config.get("no_such_setting")


def test_singleton_reset():
    """Test that reset_config drops the cached instance."""
    first = get_config()
    assert get_config() is first
    reset_config()
    assert get_config() is not first


def test_corpus_file(isolated_config):
    """Test loading the graph inventory from corpus.yaml."""
    (isolated_config / "corpus.yaml").write_text(yaml.safe_dump(CORPUS))
    graphs = get_config().get_graphs()
    assert [g.name for g in graphs] == ["bowtie"]
    assert graphs[0].to_graph().e == 6
    corpus = load_corpus()
    assert corpus[-1].name == "bowtie"
    assert corpus[-1].graph.c == 1


def test_corpus_env_json(isolated_config, monkeypatch):
    """Test that the JSON environment inventory takes precedence over the file."""
    (isolated_config / "corpus.yaml").write_text(yaml.safe_dump(CORPUS))
    monkeypatch.setenv("FOREST_HILBERT_CORPUS_JSON", json.dumps({"graphs": [{"n": 2, "edges": [[0, 1]]}]}))
    graphs = get_config().get_graphs()
    assert len(graphs) == 1
    assert graphs[0].to_graph() == Multigraph(2, ((0, 1),))
    assert load_corpus(include_builtin=False)[0].name == "inventory_0"


def test_corpus_env_yaml_b64(monkeypatch):
    """Test the base64 YAML inventory."""
    encoded = base64.b64encode(yaml.safe_dump(CORPUS).encode()).decode()
    monkeypatch.setenv("FOREST_HILBERT_CORPUS_YAML_B64", encoded)
    assert get_config().get_graphs()[0].name == "bowtie"


def test_malformed_graph_entry():
    """Test that an entry without n raises ConfigError."""
    with pytest.raises(ConfigError):
        GraphEntry.from_dict({"name": "broken", "edges": [[0, 1]]})


def test_graph_entry_dict():
    """Test the dict form of an inventory entry."""
    entry = GraphEntry.from_dict(CORPUS["graphs"][0])
    assert entry.to_dict() == CORPUS["graphs"][0]


@pytest.mark.parametrize(
    "settings",
    [
        {"t_values": 2},
        {"t_values": ["1"]},
        {"t_values": [True]},
        {"memo_enabled": "yes"},
        {"samples": 0},
        {"extra_degrees": -1},
        {"seed": True},
        {"max_basis": 2.5},
        {"rank_backend": ["exact"]},
    ],
)
def test_invalid_settings_file(isolated_config, settings):
    """Test that wrongly typed values in settings.yaml raise ConfigError."""
    (isolated_config / "settings.yaml").write_text(yaml.safe_dump(settings))
    with pytest.raises(ConfigError):
        get_config()


def test_samples_must_be_positive(monkeypatch):
    """Test that zero sample points are refused from the environment and overrides."""
    with pytest.raises(ConfigError):
        get_config().override(samples=0)
    monkeypatch.setenv("FOREST_HILBERT_SAMPLES", "0")
    with pytest.raises(ConfigError):
        Config()
