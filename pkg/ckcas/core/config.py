"""
Configuration management for ckcas.
"""

import json
import yaml
from dataclasses import asdict, dataclass, field, fields
from typing import Dict, Optional
from pathlib import Path

from .exceptions import ConfigurationError


VALID_FORMATS = ('text', 'latex', 'json')
VALID_LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


@dataclass
class CkcasConfig:
    """Configuration class for the ckcas engine and CLI."""

    output_directory: str = "output"
    default_format: str = "text"
    expand_omega_products: bool = True

    # Randomized checks
    seed: int = 20240101
    rank_trials: int = 3
    random_magnitude: int = 10 ** 4
    identity_trials: int = 20
    workers: int = 1

    # ASCII spellings accepted by SymbolConverter, per output format
    notation_rules: Dict[str, Dict[str, str]] = field(default_factory=lambda: {
        'text': {
            'Omega': 'Ω',
            'omega': 'ω',
            'kappa': 'κ',
            '-': '−',
        },
        'latex': {
            'Ω': '\\Omega',
            'ω': '\\omega',
            'κ': '\\kappa',
            '−': '-',
        },
    })

    # Logging configuration
    log_level: str = "INFO"
    log_file: Optional[str] = None

    output_encoding: str = "utf-8"

    @classmethod
    def load_from_file(cls, config_path: str) -> 'CkcasConfig':
        """
        Load configuration from a JSON or YAML file.

        Args:
            config_path: Path to the configuration file

        Returns:
            CkcasConfig instance with loaded settings

        Raises:
            FileNotFoundError: If config file doesn't exist
            ConfigurationError: If the file format or a key is invalid
        """
        config_path = Path(config_path)

        if not config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")

        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                if config_path.suffix.lower() == '.json':
                    data = json.load(f)
                elif config_path.suffix.lower() in ['.yaml', '.yml']:
                    data = yaml.safe_load(f)
                else:
                    raise ConfigurationError("Unsupported config file format", config_path.suffix)
        except (json.JSONDecodeError, yaml.YAMLError) as e:
            raise ConfigurationError("Invalid configuration file format", str(e))

        data = data or {}
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigurationError("Unknown configuration keys", ", ".join(unknown))

        return cls(**data)

    def to_dict(self) -> Dict:
        """Convert configuration to a plain dictionary."""
        return asdict(self)

    def save_to_file(self, config_path: str) -> None:
        """
        Save configuration to a JSON or YAML file.

        Args:
            config_path: Path where to save the configuration file
        """
        config_path = Path(config_path)
        config_path.parent.mkdir(parents=True, exist_ok=True)

        data = self.to_dict()

        with open(config_path, 'w', encoding='utf-8') as f:
            if config_path.suffix.lower() == '.json':
                json.dump(data, f, indent=2, ensure_ascii=False)
            elif config_path.suffix.lower() in ['.yaml', '.yml']:
                yaml.dump(data, f, default_flow_style=False, allow_unicode=True)
            else:
                raise ConfigurationError("Unsupported config file format", config_path.suffix)

    def validate(self) -> bool:
        """
        Validate configuration settings.

        Returns:
            True if configuration is valid

        Raises:
            ConfigurationError: If configuration is invalid
        """
        if self.default_format not in VALID_FORMATS:
            raise ConfigurationError("Invalid output format", self.default_format)

        if self.log_level not in VALID_LOG_LEVELS:
            raise ConfigurationError("Invalid log level", self.log_level)

        for name in ('rank_trials', 'identity_trials', 'workers', 'random_magnitude'):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ConfigurationError(f"Invalid {name}", repr(value))

        if not isinstance(self.notation_rules, dict):
            raise ConfigurationError("notation_rules must be a mapping")

        return True

    def get_output_path(self, output_name: str) -> Path:
        """Get full path to an output file."""
        return Path(self.output_directory) / output_name
