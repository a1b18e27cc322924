from .base_store import BaseStore
from .factory import StoreFactory
from .json_store import JSONFileStore
from .records import DiagramRecord

__all__ = ["BaseStore", "StoreFactory", "JSONFileStore", "DiagramRecord"]
