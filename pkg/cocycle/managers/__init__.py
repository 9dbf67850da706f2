"""Módulo de managers - Configuración persistente."""

from cocycle.managers.settings_manager import (
    SettingsManager,
    VerifySettings,
    get_global_settings,
    set_global_settings_manager,
)

__all__ = [
    'SettingsManager',
    'VerifySettings',
    'get_global_settings',
    'set_global_settings_manager',
]
