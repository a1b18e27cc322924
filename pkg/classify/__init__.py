from .signature import ChannelSignature, SignatureConfig, TopologicalSignature, compute_signatures, signature
from .distance import pairwise_distances, sample_distance
from .knn import knn_predict, predict_from_distances
from .evaluate import EvalProtocol, EvalReport, evaluate, evaluate_distances

# ActionClassifier lives in classify.classifier; it depends on the store package, which imports this one.

__all__ = [
    "ChannelSignature",
    "SignatureConfig",
    "TopologicalSignature",
    "compute_signatures",
    "signature",
    "pairwise_distances",
    "sample_distance",
    "knn_predict",
    "predict_from_distances",
    "EvalProtocol",
    "EvalReport",
    "evaluate",
    "evaluate_distances",
]
