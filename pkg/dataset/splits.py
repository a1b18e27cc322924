import logging
from typing import List, NamedTuple, Sequence

import numpy as np

from utils.errors import ClassTooSmall

logger = logging.getLogger(__name__)


class Split(NamedTuple):
    train: np.ndarray
    test: np.ndarray


def labels_of(items: Sequence) -> List[str]:
    """Labels of samples/signatures, or the items themselves when they are plain labels."""
    return [item if isinstance(item, str) else item.label for item in items]


def make_splits(items: Sequence, n_splits: int, test_per_class: int, seed: int) -> List[Split]:
    """Random class-balanced train/test splits.

    Each test set holds exactly `test_per_class` indices of every class drawn without
    replacement; the train set is the complement. Both are sorted ascending.
    """

    if n_splits < 0 or test_per_class < 0:
        raise ValueError(f"n_splits and test_per_class must be nonnegative, got {n_splits}, {test_per_class}")

    labels = np.asarray(labels_of(items), dtype=object)
    classes = sorted(set(labels.tolist()))
    members = {c: np.flatnonzero(labels == c) for c in classes}
    for c in classes:
        if members[c].size <= test_per_class:
            raise ClassTooSmall(c, int(members[c].size), test_per_class)

    rng = np.random.default_rng(seed)
    everything = np.arange(labels.size)
    splits = []
    for _ in range(n_splits):
        picks = [rng.choice(members[c], size=test_per_class, replace=False) for c in classes]
        test = np.sort(np.concatenate(picks)) if picks else np.empty(0, dtype=np.int64)
        test = test.astype(np.int64)
        train = np.setdiff1d(everything, test)
        splits.append(Split(train, test))

    logger.debug("Made %d splits (%d classes, %d test per class, seed %d)", n_splits, len(classes), test_per_class, seed)
    return splits
