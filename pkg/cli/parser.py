import argparse
from typing import Union

from config import settings

SYNTH_PRESETS = ["lorenz", "rossler", "sine", "noisy_sine", "damped_sine"]


def tau_arg(value: str) -> Union[int, str]:
    if value == "auto":
        return value
    try:
        tau = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'auto', got {value!r}")
    if tau < 1:
        raise argparse.ArgumentTypeError(f"tau must be at least 1, got {tau}")
    return tau


def scale_arg(value: str) -> Union[float, str]:
    if value == "diameter":
        return value
    try:
        scale = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number or 'diameter', got {value!r}")
    if not scale >= 0:
        raise argparse.ArgumentTypeError(f"scale must be nonnegative, got {value}")
    return scale


def _pipeline_flags() -> argparse.ArgumentParser:
    """Flags shared by `persist` and `classify`; defaults come from the pipeline settings."""

    flags = argparse.ArgumentParser(add_help=False)
    flags.add_argument('--m', type=int, default=settings.embedding_dimension,
                       help='Embedding dimension (default: %(default)s)')
    flags.add_argument('--tau', type=tau_arg, default=settings.embedding_delay or 'auto',
                       help="Embedding delay in samples, or 'auto' (default: %(default)s)")
    flags.add_argument('--max-points', type=int, default=settings.max_points,
                       help='Subsampling cap per channel (default: %(default)s)')
    flags.add_argument('--eps-max', type=scale_arg,
                       default='diameter' if settings.eps_max is None else settings.eps_max,
                       help="Filtration truncation scale, or 'diameter' (default: %(default)s)")
    flags.add_argument('--no-temporal-links', dest='temporal_links', action='store_false',
                       default=settings.temporal_links,
                       help='Build the plain Vietoris-Rips filtration without time-adjacency edges')
    flags.add_argument('--zscore', action='store_true', default=settings.zscore,
                       help='Z-score every channel before embedding')
    flags.add_argument('--reduction', choices=['dual', 'twist'], default=settings.reduction,
                       help='Matrix reduction strategy (default: %(default)s)')
    flags.add_argument('--threshold', type=float, default=None,
                       help='Persistence threshold (default: %s x eps_max)' % settings.threshold_fraction)
    flags.add_argument('--seed', type=int, default=settings.seed,
                       help='Seed for every random choice (default: %(default)s)')
    flags.add_argument('--threads', type=int, default=settings.threads,
                       help='Worker processes (default: %(default)s)')
    flags.add_argument('--allow-ragged', action='store_true',
                       help='Accept channels of differing lengths')
    return flags


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='attractor-tda',
        description='Topological signatures of delay-embedded time series'
    )
    parser.add_argument('--log-level', default=None, help='Override the configured log level')
    commands = parser.add_subparsers(dest='command', required=True)
    pipeline = _pipeline_flags()

    synth = commands.add_parser('synth', help='Generate a synthetic time series CSV')
    synth.add_argument('preset', choices=SYNTH_PRESETS)
    synth.add_argument('--out', help='Output CSV (default: standard output)')
    synth.add_argument('--n', type=int, default=None,
                       help='Samples to keep (signals: 256, systems: n_steps - burn_in)')
    synth.add_argument('--seed', type=int, default=settings.seed)
    synth.add_argument('--dt', type=float, default=settings.dt)
    synth.add_argument('--n-steps', type=int, default=settings.n_steps)
    synth.add_argument('--burn-in', type=int, default=settings.burn_in)
    synth.add_argument('--x0', type=float, nargs=3, default=[1.0, 1.0, 1.0])
    for name in ('sigma', 'rho', 'beta', 'a', 'b', 'c'):
        synth.add_argument(f'--{name}', type=float, default=None, help=f'{name} coefficient')
    synth.add_argument('--amplitude', type=float, default=1.0)
    synth.add_argument('--period', type=float, default=16.0, help='Period in samples')
    synth.add_argument('--phase', type=float, default=0.0)
    synth.add_argument('--noise', type=float, default=0.1, help='Noise level for noisy_sine')
    synth.add_argument('--decay', type=float, default=0.01, help='Per-sample decay for damped_sine')

    persist = commands.add_parser('persist', parents=[pipeline],
                                  help='Compute per-channel persistence diagrams of a CSV file')
    persist.add_argument('input', help='Time series CSV')
    persist.add_argument('--out', default='diagrams', help='Output directory (default: %(default)s)')
    persist.add_argument('--keep-zero-persistence', action='store_true',
                         default=settings.keep_zero_persistence,
                         help='Keep pairs born and killed at the same scale')

    dist = commands.add_parser('dist', help='Distance between two diagram files')
    dist.add_argument('left')
    dist.add_argument('right')
    dist.add_argument('--metric', choices=['wasserstein', 'bottleneck'], default='wasserstein')

    classify = commands.add_parser('classify', parents=[pipeline],
                                   help='Evaluate nearest-neighbor classification over random splits')
    classify.add_argument('manifest', help='Dataset manifest CSV')
    classify.add_argument('--splits', dest='n_splits', type=int, default=settings.n_splits)
    classify.add_argument('--test-per-class', type=int, default=settings.test_per_class)
    classify.add_argument('--k', type=int, default=settings.k)
    classify.add_argument('--out', default='results', help='Output directory (default: %(default)s)')

    corpus = commands.add_parser('corpus', help='Write the five-class synthetic corpus')
    corpus.add_argument('--out', required=True, help='Output directory')
    corpus.add_argument('--instances', type=int, default=20, help='Instances per class')
    corpus.add_argument('--n', type=int, default=400, help='Samples per channel')
    corpus.add_argument('--channels', type=int, default=3)
    corpus.add_argument('--seed', type=int, default=settings.seed)

    return parser
