import logging
from typing import List, Optional

from cli import COMMANDS, build_parser
from config import setup_logging
from utils.errors import PipelineError

logger = logging.getLogger(__name__)


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point for the attractor topology pipeline.

    Exit status: 0 on success, 1 on a pipeline or parameter error, 2 on usage errors.
    """

    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)

    try:
        return COMMANDS[args.command](args)
    except PipelineError as e:
        logger.error("%s failed: %s", args.command, e)
    except ValueError as e:
        logger.error("%s: invalid parameters: %s", args.command, e)
    except KeyboardInterrupt:
        logger.warning("Interrupted by user.")
    return 1


if __name__ == "__main__":
    exit(main())
