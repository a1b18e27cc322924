from .pipeline_settings import PipelineSettings, settings
from .store_settings import JSONStoreConfig, StoreSettings, store_settings
from .logging import setup_logging

__all__ = [
    "PipelineSettings",
    "settings",
    "JSONStoreConfig",
    "StoreSettings",
    "store_settings",
    "setup_logging",
]
