import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Union

from classify.evaluate import EvalReport

from .records import DiagramRecord

logger = logging.getLogger(__name__)


class BaseStore(ABC):
    """Abstract base class for persisting pipeline artifacts."""

    @abstractmethod
    def save_diagram_record(self, stem: str, record: DiagramRecord) -> Path:
        """Save one channel/dimension diagram; returns where it was written."""
        pass

    @abstractmethod
    def load_diagram_record(self, path: Union[str, Path]) -> DiagramRecord:
        """Load a diagram record (relative paths resolve against the store)."""
        pass

    @abstractmethod
    def save_report(self, report: EvalReport) -> Path:
        """Save an evaluation report."""
        pass

    @abstractmethod
    def load_report(self) -> EvalReport:
        """Load the stored evaluation report."""
        pass

    @abstractmethod
    def list_diagram_records(self) -> List[Path]:
        """Paths of every stored diagram record, sorted."""
        pass

    @abstractmethod
    def clear(self) -> None:
        """Delete all stored artifacts."""
        pass
