import argparse
import json
import logging
import sys
from pathlib import Path

from classify.classifier import ActionClassifier
from classify.signature import channel_signature
from dataset import read_series_csv, write_corpus, write_series_csv
from dataset.series_io import CSV_FLOAT_FORMAT, series_frame
from dynamics import PRESETS, OdeSpec, SignalParams, integrate, synth_signal
from store import DiagramRecord, StoreFactory
from topology.diagrams import finitize_common, persistent_betti
from topology.metrics import bottleneck, wasserstein1
from utils.errors import ChannelError, MixedDimensions, PipelineError

from .run_config import RunConfig

logger = logging.getLogger(__name__)


def run_config_from_args(args: argparse.Namespace) -> RunConfig:
    """Freeze the parsed flags into a RunConfig; unset flags keep their settings defaults."""

    fields = set(RunConfig.model_fields)
    values = {k: v for k, v in vars(args).items() if k in fields and v is not None}
    for name in ('input', 'manifest'):
        if getattr(args, name, None):
            values['inputs'] = [getattr(args, name)]
    return RunConfig(**values)


def cmd_synth(args: argparse.Namespace) -> int:
    if args.preset in PRESETS:
        coefficients = {k: getattr(args, k) for k in PRESETS[args.preset] if getattr(args, k) is not None}
        unknown = [k for k in ('sigma', 'rho', 'beta', 'a', 'b', 'c')
                   if k not in PRESETS[args.preset] and getattr(args, k) is not None]
        if unknown:
            raise ValueError(f"{args.preset} takes no coefficient(s) {unknown}")
        n_steps = args.burn_in + args.n if args.n is not None else args.n_steps
        spec = OdeSpec(
            system=args.preset,
            params=coefficients,
            x0=tuple(args.x0),
            dt=args.dt,
            n_steps=n_steps,
            burn_in=args.burn_in,
        )
        channels = list(integrate(spec))
        metadata = spec.model_dump(mode="json")
        metadata["params"] = spec.coefficients
    else:
        params = SignalParams(
            amplitude=args.amplitude,
            period=args.period,
            phase=args.phase,
            noise=args.noise if args.preset == "noisy_sine" else 0.0,
            decay=args.decay if args.preset == "damped_sine" else 0.0,
        )
        n = args.n if args.n is not None else 256
        channels = [synth_signal(args.preset, params, n, args.seed)]
        metadata = {"kind": args.preset, "n": n, "seed": args.seed, **params.model_dump()}

    metadata["rows"] = len(channels[0])
    if args.out:
        write_series_csv(args.out, channels)
        print(json.dumps({"out": args.out, **metadata}))
    else:
        # Without --out the CSV itself goes to stdout; metadata is only logged.
        series_frame(channels).to_csv(sys.stdout, index=False, na_rep="", float_format=CSV_FLOAT_FORMAT)
    logger.info("Generated %s: %s", args.preset, metadata)
    return 0


def cmd_persist(args: argparse.Namespace) -> int:
    cfg = run_config_from_args(args)
    sig_cfg = cfg.signature_config()
    store = StoreFactory.create(cfg.out)
    stem = Path(args.input).stem

    channels = read_series_csv(args.input, allow_ragged=args.allow_ragged)
    logger.info("Computing diagrams for %d channels of %s", len(channels), args.input)

    for series in channels:
        try:
            sig = channel_signature(series, sig_cfg, cfg.reduction, cfg.keep_zero_persistence)
        except PipelineError as e:
            raise ChannelError(series.id, e) from e

        threshold = cfg.persistence_threshold(sig.eps_max)
        betti = []
        for dim in (0, 1):
            record = DiagramRecord(
                channel=sig.channel,
                dim=dim,
                tau=sig.tau,
                n_points=sig.n_points,
                fingerprint=sig_cfg.digest(),
                config=sig_cfg,
                seed=cfg.seed,
                diagram=sig.diagram(dim).canonical(),
            )
            store.save_diagram_record(stem, record)
            betti.append(persistent_betti(sig.diagram(dim), dim, threshold))
        print(f"{sig.channel}\ttau={sig.tau}\teps_max={sig.eps_max!r}\tthreshold={threshold!r}\t"
              f"beta0={betti[0]}\tbeta1={betti[1]}")
    return 0


def cmd_dist(args: argparse.Namespace) -> int:
    store = StoreFactory.create(".")
    left = store.load_diagram_record(args.left)
    right = store.load_diagram_record(args.right)
    if left.dim != right.dim:
        raise MixedDimensions({left.dim, right.dim})

    x, y = finitize_common(left.diagram, right.diagram)
    metric = wasserstein1 if args.metric == "wasserstein" else bottleneck
    print(repr(metric(x, y)))
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    cfg = run_config_from_args(args)
    classifier = ActionClassifier(
        cfg.signature_config(),
        cfg.protocol(),
        cfg.out,
        workers=cfg.threads,
        reduction=cfg.reduction,
        allow_ragged=args.allow_ragged,
    )
    report = classifier.run(args.manifest)
    if report is None:
        return 1

    print(f"accuracy {report.summary()} (population std, fraction)")
    width = max(len(c) for c in report.classes)
    print(" " * width + "  " + "  ".join(f"{c[:8]:>8}" for c in report.classes))
    for label, row in zip(report.classes, report.confusion):
        print(f"{label:>{width}}  " + "  ".join(f"{v:8.4f}" for v in row))
    return 0


def cmd_corpus(args: argparse.Namespace) -> int:
    manifest_path, manifest = write_corpus(args.out, args.instances, args.n, args.channels, args.seed)
    print(json.dumps({"manifest": str(manifest_path), "samples": len(manifest.entries), "classes": manifest.classes}))
    return 0


COMMANDS = {
    "synth": cmd_synth,
    "persist": cmd_persist,
    "dist": cmd_dist,
    "classify": cmd_classify,
    "corpus": cmd_corpus,
}
