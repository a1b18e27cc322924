from pathlib import Path
from typing import Union

from config import store_settings
from .base_store import BaseStore
from .json_store import JSONFileStore


class StoreFactory:
    """Factory for creating storage backend instances."""

    @staticmethod
    def create(output_dir: Union[str, Path]) -> BaseStore:
        """Create a store rooted at `output_dir` using the configured backend."""

        backend = store_settings.backend.lower()

        if backend == "json":
            return JSONFileStore(output_dir, store_settings.json_store)
        else:
            raise ValueError(f"Unsupported store backend: {backend}")
