import json
import logging
from pathlib import Path
from typing import List, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from classify.evaluate import EvalReport
from config import JSONStoreConfig
from utils.errors import MissingFile, ParseError

from .base_store import BaseStore
from .records import DiagramRecord

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)


class JSONFileStore(BaseStore):
    """One JSON file per diagram record plus a report file, all under `output_dir`."""

    def __init__(self, output_dir: Union[str, Path], config: JSONStoreConfig):
        self.output_dir = Path(output_dir)
        self.config = config
        self.report_file_path = self.output_dir / config.report_filename

        self.output_dir.mkdir(parents=True, exist_ok=True)

    def _write(self, path: Path, model: BaseModel) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8") as f:
            json.dump(model.model_dump(mode="json"), f, indent=self.config.indent, ensure_ascii=False)
            f.write("\n")
        return path

    @staticmethod
    def _read(path: Path, model: Type[M]) -> M:
        if not path.is_file():
            raise MissingFile(path)
        try:
            with path.open("r", encoding="utf-8") as f:
                return model.model_validate(json.load(f))
        except json.JSONDecodeError as e:
            raise ParseError(path, row=e.lineno, reason=e.msg)
        except ValidationError as e:
            raise ParseError(path, reason=f"invalid {model.__name__}: {e.errors()[0]['msg']}")

    def save_diagram_record(self, stem: str, record: DiagramRecord) -> Path:
        """Write a record named after the input stem, channel and dimension."""

        filename = self.config.diagram_filename_template.format(stem=stem, channel=record.channel, dim=record.dim)
        path = self._write(self.output_dir / filename, record)
        logger.info("Saved %d-pair H%d diagram for channel '%s' to %s", len(record.diagram), record.dim, record.channel, path)
        return path

    def load_diagram_record(self, path: Union[str, Path]) -> DiagramRecord:
        path = Path(path)
        return self._read(path if path.is_absolute() else self.output_dir / path, DiagramRecord)

    def save_report(self, report: EvalReport) -> Path:
        path = self._write(self.report_file_path, report)
        logger.info("Saved evaluation report to %s", path)
        return path

    def load_report(self) -> EvalReport:
        return self._read(self.report_file_path, EvalReport)

    def list_diagram_records(self) -> List[Path]:
        return sorted(p for p in self.output_dir.glob("*.json") if p != self.report_file_path)

    def clear(self) -> None:
        """Delete every diagram record and the report."""

        removed = 0
        for path in self.list_diagram_records():
            path.unlink()
            removed += 1
        if self.report_file_path.exists():
            self.report_file_path.unlink()
            removed += 1
        logger.info("Cleared %d artifacts from %s", removed, self.output_dir)
