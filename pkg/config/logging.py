import logging
import sys
from pathlib import Path
from typing import Optional

from .pipeline_settings import settings


def setup_logging(level: Optional[str] = None) -> None:
    """Configure logging for the pipeline based on pipeline_settings.py.

    Diagnostics go to stderr; stdout is reserved for command output.
    """

    handlers = [logging.StreamHandler(sys.stderr)]

    if settings.log_to_file:
        log_path = Path(settings.log_file_path)
        log_path.parent.mkdir(parents=True, exist_ok=True)

        handlers.append(logging.FileHandler(settings.log_file_path))

    logging.basicConfig(
        level=getattr(logging, (level or settings.log_level).upper()),
        format=settings.log_format,
        handlers=handlers,
        force=True,
    )
