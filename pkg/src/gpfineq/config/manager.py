import json
import yaml
import logging
import os

from ..errors import ConfigError, DomainError
from ..generators import GeneratorConfig
from ..inequalities import INEQUALITY_IDS
from ..operators import QuadConfig
from .campaign import CampaignConfig

# sections merged key by key with the defaults instead of replaced wholesale
_NESTED_SECTIONS = ('generator', 'quadrature', 'latex')


class ConfigManager:
    """Loads campaign configuration from a YAML or JSON file on top of default_config.yaml"""

    def __init__(self, config_path=None):
        self.config_path = config_path
        self._default_config = self._load_default_config()
        self._config = self._load_config()

    def _load_default_config(self):
        """Load default configuration from default_config.yaml"""
        # Look for default_config.yaml in the project root
        default_config_path = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(os.path.dirname(__file__)))), 'default_config.yaml')
        try:
            with open(default_config_path, 'r') as f:
                return yaml.safe_load(f) or {}
        except FileNotFoundError:
            logging.warning(f"Default configuration file {default_config_path} not found. Using hardcoded defaults.")
            return {
                'inequalities': list(INEQUALITY_IDS),
                'alpha_grid': [0.5, 1.0, 2.0],
                'beta_grid': [0.8, 1.5],
                'p1_grid': [0.5, 1.0],
                'p2_grid': [0.7, 1.0],
                'x_grid': [1.0, 2.0],
                'cases_per_cell': 5,
                'generator': {'seed': 0},
                'tol': 1e-8,
                'bounds_slack': 1e-3,
                'quadrature': {},
                'workers': 1,
                'output': 'reports/campaign.jsonl',
                'format': 'jsonl',
                'latex': {'table_style': 'booktabs', 'decimal_places': 3, 'underline_worst': True, 'display_names': {}},
            }

    def _load_config(self):
        """Load configuration from a YAML file, or a JSON file by its .json suffix"""
        if self.config_path is None:
            return {}
        try:
            with open(self.config_path, 'r') as f:
                if self.config_path.lower().endswith('.json'):
                    config = json.load(f)
                else:
                    config = yaml.safe_load(f)
        except FileNotFoundError as exc:
            raise ConfigError(f"Configuration file {self.config_path} not found") from exc
        except OSError as exc:
            raise ConfigError(f"Cannot read configuration file {self.config_path}: {exc}") from exc
        except (yaml.YAMLError, json.JSONDecodeError) as exc:
            raise ConfigError(f"Cannot parse configuration file {self.config_path}: {exc}") from exc
        if config is None:
            return {}
        if not isinstance(config, dict):
            raise ConfigError(f"Configuration file {self.config_path} must hold a mapping at top level")
        unknown = sorted(set(config) - set(self._default_config))
        if unknown:
            raise ConfigError(f"Unknown configuration keys in {self.config_path}: {unknown}")
        return config

    def _get_config_value(self, key):
        """Get configuration value with fallback to defaults"""
        if key in _NESTED_SECTIONS:
            merged = dict(self._default_config.get(key) or {})
            section = self._config.get(key) or {}
            if not isinstance(section, dict):
                raise ConfigError(f"{key}: expected a mapping, got {section!r}")
            merged.update(section)
            return merged
        return self._config.get(key, self._default_config.get(key))

    @property
    def inequalities(self):
        return self._get_config_value('inequalities')

    @property
    def grids(self):
        """alpha, beta, p1, p2 and x grids keyed by their config names"""
        return {key: self._get_config_value(key) for key in ('alpha_grid', 'beta_grid', 'p1_grid', 'p2_grid', 'x_grid')}

    @property
    def generator(self):
        section = self._get_config_value('generator')
        if 'x_range' in section:
            section['x_range'] = tuple(section['x_range'])
        try:
            return GeneratorConfig(**section)
        except (TypeError, DomainError) as exc:
            raise ConfigError(f"generator: {exc}") from exc

    @property
    def quadrature(self):
        try:
            return QuadConfig(**self._get_config_value('quadrature'))
        except (TypeError, DomainError) as exc:
            raise ConfigError(f"quadrature: {exc}") from exc

    @property
    def latex(self):
        """Table style, decimal places, underline flag and display names for summary tables"""
        section = self._get_config_value('latex')
        if section.get('table_style', 'booktabs') not in ('booktabs', 'hline'):
            raise ConfigError(f"latex.table_style: expected 'booktabs' or 'hline', got {section['table_style']!r}")
        section.setdefault('display_names', {})
        return section

    def get_display_name(self, col_name):
        """Column header for summary tables, falling back to the prettified column name"""
        names = self.latex.get('display_names') or {}
        if col_name in names:
            return names[col_name]
        return ' '.join(word.capitalize() for word in col_name.split('_'))

    def campaign_config(self, **overrides):
        """Validated CampaignConfig; keyword overrides (seed, tol, workers, output, format) win over the file"""
        cfg = CampaignConfig(
            inequalities=self.inequalities,
            cases_per_cell=self._get_config_value('cases_per_cell'),
            generator=self.generator,
            tol=self._get_config_value('tol'),
            bounds_slack=self._get_config_value('bounds_slack'),
            quadrature=self.quadrature,
            workers=self._get_config_value('workers'),
            output=self._get_config_value('output'),
            format=self._get_config_value('format'),
            **self.grids,
        )
        return cfg.with_overrides(**overrides)
