from collections import Counter
from typing import Sequence

import numpy as np

from utils.errors import EmptyTrainSet

from .distance import sample_distance
from .signature import TopologicalSignature


def predict_from_distances(distances: Sequence[float], train_labels: Sequence[str], k: int = 1) -> str:
    """Majority label among the k nearest training items.

    Neighbors are ordered by distance, equal distances by training index; a vote tie
    goes to the label whose first neighbor comes earliest in that order.
    """

    if len(train_labels) == 0:
        raise EmptyTrainSet()
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")

    order = np.argsort(np.asarray(distances, dtype=np.float64), kind="stable")
    nearest = [train_labels[i] for i in order[:k]]
    if k == 1:
        return nearest[0]

    votes = Counter(nearest)
    top = max(votes.values())
    return next(label for label in nearest if votes[label] == top)


def knn_predict(query: TopologicalSignature, train: Sequence[TopologicalSignature], k: int = 1) -> str:
    if len(train) == 0:
        raise EmptyTrainSet()
    distances = [sample_distance(query, t) for t in train]
    return predict_from_distances(distances, [t.label for t in train], k)
