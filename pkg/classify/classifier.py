import logging
from pathlib import Path
from typing import Optional, Union

from dataset import load_dataset, read_manifest
from store import StoreFactory

from .evaluate import EvalProtocol, EvalReport, evaluate
from .signature import SignatureConfig, compute_signatures

logger = logging.getLogger(__name__)


class ActionClassifier:
    """Manifest-to-report orchestrator: load, signatures, distances, split evaluation, store."""

    def __init__(
        self,
        signature_config: SignatureConfig,
        protocol: EvalProtocol,
        output_dir: Union[str, Path],
        workers: int = 1,
        reduction: str = "dual",
        allow_ragged: bool = False,
    ):
        self.signature_config = signature_config
        self.protocol = protocol
        self.workers = workers
        self.reduction = reduction
        self.allow_ragged = allow_ragged

        self._store = StoreFactory.create(output_dir)

    def run(self, manifest_path: Union[str, Path]) -> Optional[EvalReport]:
        """Execute the classification pipeline and save the report."""

        logger.info("=" * 80)
        logger.info("Starting classification for %s", manifest_path)
        logger.info("Config fingerprint %s", self.signature_config.digest())
        logger.info("=" * 80)

        logger.info("Loading dataset...")
        manifest = read_manifest(manifest_path)
        samples = load_dataset(manifest, allow_ragged=self.allow_ragged, workers=self.workers)

        if not samples:
            logger.error("Manifest lists no samples. Aborting.")
            return None

        logger.info("Computing topological signatures...")
        signatures = compute_signatures(samples, self.signature_config, self.workers, self.reduction)

        logger.info("Evaluating %d splits...", self.protocol.n_splits)
        report = evaluate(signatures, self.protocol, self.workers)
        self._store.save_report(report)

        logger.info("=" * 80)
        logger.info("Classification completed: %s", report.summary())
        logger.info("=" * 80)
        return report
