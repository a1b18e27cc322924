import hashlib
import logging
from typing import List, Literal, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field
from sklearn.metrics import accuracy_score, confusion_matrix

from dataset.splits import labels_of, make_splits
from utils.errors import EmptyTestSet

from .distance import pairwise_distances
from .knn import predict_from_distances
from .signature import SignatureConfig, TopologicalSignature

logger = logging.getLogger(__name__)


class EvalProtocol(BaseModel):
    n_splits: int = Field(default=100, ge=1)
    test_per_class: int = Field(default=5, ge=0)
    seed: int = 0
    k: int = Field(default=1, ge=1)


class EvalReport(BaseModel):
    """Split-protocol result. Accuracies are fractions; std is the population std over splits."""

    fingerprint: str
    config: Optional[SignatureConfig] = None
    seed: int
    n_splits: int
    test_per_class: int
    k: int
    classes: List[str]
    mean_accuracy: float
    std_accuracy: float
    std_kind: Literal["population"] = "population"
    accuracy_unit: Literal["fraction"] = "fraction"
    per_split_accuracy: List[float]
    test_counts: List[int]
    confusion: List[List[float]]

    def digest(self) -> str:
        return hashlib.sha256(self.model_dump_json().encode("utf-8")).hexdigest()

    def summary(self) -> str:
        return f"{self.mean_accuracy:.4f} ± {self.std_accuracy:.4f} over {self.n_splits} splits"


def evaluate_distances(
    distances: np.ndarray,
    labels: Sequence[str],
    protocol: EvalProtocol,
    fingerprint: str = "",
    config: Optional[SignatureConfig] = None,
) -> EvalReport:
    """Run k-NN over every split of a precomputed sample distance matrix."""

    labels = list(labels)
    if protocol.test_per_class < 1 or not labels:
        raise EmptyTestSet()

    distances = np.asarray(distances, dtype=np.float64)
    classes = sorted(set(labels))
    splits = make_splits(labels, protocol.n_splits, protocol.test_per_class, protocol.seed)

    per_split: List[float] = []
    truth: List[str] = []
    predicted: List[str] = []
    for split in splits:
        train_labels = [labels[i] for i in split.train]
        y_true = [labels[i] for i in split.test]
        y_pred = [
            predict_from_distances(distances[i, split.train], train_labels, protocol.k)
            for i in split.test
        ]
        per_split.append(float(accuracy_score(y_true, y_pred)))
        truth.extend(y_true)
        predicted.extend(y_pred)

    confusion = confusion_matrix(truth, predicted, labels=classes, normalize="true")
    counts = [truth.count(c) for c in classes]
    accuracies = np.asarray(per_split)

    report = EvalReport(
        fingerprint=fingerprint,
        config=config,
        seed=protocol.seed,
        n_splits=protocol.n_splits,
        test_per_class=protocol.test_per_class,
        k=protocol.k,
        classes=classes,
        mean_accuracy=float(accuracies.mean()),
        std_accuracy=float(accuracies.std()),
        per_split_accuracy=per_split,
        test_counts=counts,
        confusion=confusion.tolist(),
    )
    logger.info("Accuracy %s", report.summary())
    return report


def evaluate(
    signatures: Sequence[TopologicalSignature],
    protocol: EvalProtocol,
    workers: int = 1,
) -> EvalReport:
    """Evaluate cached signatures; the distance matrix is computed once for all splits."""

    distances = pairwise_distances(signatures, workers)
    fingerprint = signatures[0].fingerprint if signatures else ""
    config = signatures[0].config if signatures else None
    return evaluate_distances(distances, labels_of(signatures), protocol, fingerprint, config)
