"""
Settings Loader

Defaults come from ``config/seshadri.yaml`` and can be overridden through
the environment (``SESHADRI_PRECISION``, ``SESHADRI_FORMAT``,
``SESHADRI_LOG_LEVEL``, ``SESHADRI_CONFIG``). A missing file falls back to
built-in defaults.
"""

from __future__ import annotations

import logging
import os
from fractions import Fraction
from pathlib import Path
from typing import Any, Literal, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from seshadri.errors import CatalogError
from seshadri.exact import RationalField

logger = logging.getLogger(__name__)

_CURRENT_DIR = Path(__file__).parent
_CONFIG_DIR = _CURRENT_DIR.parent.parent / "config"
_SETTINGS_FILE = _CONFIG_DIR / "seshadri.yaml"

_ENV_OVERRIDES = {
    "SESHADRI_PRECISION": "precision",
    "SESHADRI_FORMAT": "default_format",
    "SESHADRI_LOG_LEVEL": "log_level",
}


class SettingsFileSchema(BaseModel):
    """Schema for validating the settings YAML file."""

    model_config = ConfigDict(extra="ignore", arbitrary_types_allowed=True, frozen=True)

    precision: RationalField = Field(default=Fraction(1, 10**12), description="Enclosure width")
    decimal_digits: int = Field(default=6, ge=0, description="Digits in advisory decimals")
    vojta_samples: int = Field(default=64, ge=1, description="Sample points per Vojta arc")
    default_format: Literal["table", "json"] = "table"
    log_level: str = "WARNING"

    @field_validator("precision")
    @classmethod
    def ensure_positive_precision(cls, value: Fraction) -> Fraction:
        if value <= 0:
            raise ValueError("precision must be positive")
        return value

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_log_level(cls, value: Any) -> str:
        return str(value).upper() if value else "WARNING"


class SeshadriConfig:
    """Singleton for settings loaded from YAML plus environment overrides."""

    _instance: Optional[SeshadriConfig] = None
    _settings: SettingsFileSchema

    def __new__(cls) -> SeshadriConfig:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._load_config()
        return cls._instance

    def _load_config(self) -> None:
        path = Path(os.environ.get("SESHADRI_CONFIG", _SETTINGS_FILE))
        raw: dict[str, Any] = {}
        if path.exists():
            with open(path, encoding="utf-8") as f:
                raw = yaml.safe_load(f) or {}
        else:
            logger.debug("settings file %s not found, using defaults", path)
        for variable, key in _ENV_OVERRIDES.items():
            if os.environ.get(variable):
                raw[key] = os.environ[variable]
        try:
            self._settings = SettingsFileSchema.model_validate(raw)
        except ValidationError as exc:
            raise CatalogError(f"invalid settings in {path}: {exc}") from exc

    @property
    def settings(self) -> SettingsFileSchema:
        return self._settings

    def reload(self) -> None:
        self._load_config()


def get_settings() -> SettingsFileSchema:
    return SeshadriConfig().settings


def reload_settings() -> SettingsFileSchema:
    config = SeshadriConfig()
    config.reload()
    return config.settings
