from .commands import COMMANDS, cmd_classify, cmd_corpus, cmd_dist, cmd_persist, cmd_synth, run_config_from_args
from .parser import build_parser
from .run_config import RunConfig

__all__ = [
    "COMMANDS",
    "cmd_classify",
    "cmd_corpus",
    "cmd_dist",
    "cmd_persist",
    "cmd_synth",
    "run_config_from_args",
    "build_parser",
    "RunConfig",
]
