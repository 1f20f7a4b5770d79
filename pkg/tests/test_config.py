"""
Tests for configuration management.
"""

import pytest
import tempfile
import json
import yaml
from pathlib import Path

from ckcas.core.config import CkcasConfig
from ckcas.core.exceptions import ConfigurationError


DEFAULT_CONFIG = Path(__file__).parent.parent / "config" / "default.yaml"


class TestCkcasConfig:
    """Test cases for CkcasConfig class."""

    def test_default_config(self):
        """Test default configuration creation."""
        config = CkcasConfig()

        assert config.output_directory == "output"
        assert config.default_format == "text"
        assert config.seed == 20240101
        assert config.workers == 1
        assert config.log_level == "INFO"
        assert config.notation_rules['text']['Omega'] == "Ω"
        assert config.notation_rules['latex']['κ'] == "\\kappa"

    def test_shipped_file_matches_defaults(self):
        """Test that config/default.yaml spells out the defaults."""
        assert CkcasConfig.load_from_file(str(DEFAULT_CONFIG)) == CkcasConfig()

    def test_config_validation(self):
        """Test configuration validation."""
        config = CkcasConfig()
        assert config.validate() is True

        config.default_format = "html"
        with pytest.raises(ConfigurationError):
            config.validate()

    @pytest.mark.parametrize("field,value", [
        ("log_level", "VERBOSE"),
        ("rank_trials", 0),
        ("identity_trials", "3"),
        ("workers", -1),
        ("notation_rules", ["Omega"]),
    ])
    def test_invalid_values(self, field, value):
        """Test that each validated field rejects bad values."""
        config = CkcasConfig(**{field: value})
        with pytest.raises(ConfigurationError):
            config.validate()

    def test_load_from_json(self):
        """Test loading configuration from JSON file."""
        test_config = {
            "output_directory": "test_output",
            "default_format": "latex",
            "seed": 7,
            "log_level": "DEBUG",
        }

        with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False) as f:
            json.dump(test_config, f)
            temp_path = f.name

        try:
            config = CkcasConfig.load_from_file(temp_path)
            assert config.output_directory == "test_output"
            assert config.default_format == "latex"
            assert config.seed == 7
            assert config.rank_trials == 3
        finally:
            Path(temp_path).unlink()

    def test_load_from_yaml(self):
        """Test loading configuration from YAML file."""
        test_config = {"expand_omega_products": False, "workers": 4}

        with tempfile.NamedTemporaryFile(mode='w', suffix='.yaml', delete=False) as f:
            yaml.dump(test_config, f)
            temp_path = f.name

        try:
            config = CkcasConfig.load_from_file(temp_path)
            assert config.expand_omega_products is False
            assert config.workers == 4
        finally:
            Path(temp_path).unlink()

    def test_empty_yaml(self):
        """Test that an empty file gives the defaults."""
        with tempfile.NamedTemporaryFile(mode='w', suffix='.yml', delete=False) as f:
            temp_path = f.name

        try:
            assert CkcasConfig.load_from_file(temp_path) == CkcasConfig()
        finally:
            Path(temp_path).unlink()

    def test_unknown_keys(self):
        """Test that keys outside the schema are refused."""
        with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False) as f:
            json.dump({"template_directory": "templates"}, f)
            temp_path = f.name

        try:
            with pytest.raises(ConfigurationError):
                CkcasConfig.load_from_file(temp_path)
        finally:
            Path(temp_path).unlink()

    def test_bad_files(self):
        """Test missing files, unknown suffixes and malformed content."""
        with pytest.raises(FileNotFoundError):
            CkcasConfig.load_from_file("/nonexistent/ckcas.yaml")

        with tempfile.NamedTemporaryFile(mode='w', suffix='.ini', delete=False) as f:
            f.write("[ckcas]\n")
            ini_path = f.name
        with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False) as f:
            f.write("{not json")
            json_path = f.name

        try:
            with pytest.raises(ConfigurationError):
                CkcasConfig.load_from_file(ini_path)
            with pytest.raises(ConfigurationError):
                CkcasConfig.load_from_file(json_path)
        finally:
            Path(ini_path).unlink()
            Path(json_path).unlink()

    def test_save_to_file(self):
        """Test saving configuration to file."""
        config = CkcasConfig(output_directory="test_output", seed=99)

        with tempfile.TemporaryDirectory() as temp_dir:
            for name in ("saved.json", "saved.yaml"):
                path = Path(temp_dir) / name
                config.save_to_file(str(path))
                assert CkcasConfig.load_from_file(str(path)) == config

            with pytest.raises(ConfigurationError):
                config.save_to_file(str(Path(temp_dir) / "saved.txt"))

    def test_path_methods(self):
        """Test path utility methods."""
        config = CkcasConfig(output_directory="test_output")
        assert config.get_output_path("c2.tex") == Path("test_output") / "c2.tex"
