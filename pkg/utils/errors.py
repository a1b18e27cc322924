class PipelineError(Exception):
    """Base class for every error raised by the attractor pipeline."""

    def __reduce__(self):
        # Subclass constructors take structured fields, so unpickling restores attributes directly.
        return _restore, (type(self), self.args, self.__dict__)


def _restore(cls, args, state):
    error = Exception.__new__(cls)
    error.args = args
    error.__dict__.update(state)
    return error


# Embedding

class SeriesTooShort(PipelineError):

    def __init__(self, length: int, needed: int):
        self.length = length
        self.needed = needed
        super().__init__(f"Series of length {length} is too short, need at least {needed} samples")


class NonFiniteSample(PipelineError):

    def __init__(self, series_id: str, index: int):
        self.series_id = series_id
        self.index = index
        super().__init__(f"Series '{series_id}' has a non-finite sample at index {index}")


# Filtration / homology

class EmptyCloud(PipelineError):

    def __init__(self):
        super().__init__("Point cloud is empty")


class NegativeScale(PipelineError):

    def __init__(self, value: float):
        self.value = value
        super().__init__(f"Filtration scale must be nonnegative, got {value}")


class MalformedFiltration(PipelineError):

    def __init__(self, position: int, reason: str):
        self.position = position
        self.reason = reason
        super().__init__(f"Malformed filtration at simplex {position}: {reason}")


class TooLargeForOracle(PipelineError):

    def __init__(self, n_vertices: int, limit: int):
        self.n_vertices = n_vertices
        self.limit = limit
        super().__init__(f"Oracle accepts at most {limit} vertices, got {n_vertices}")


# Diagram metrics

class MixedDimensions(PipelineError):

    def __init__(self, dims):
        self.dims = sorted(dims)
        super().__init__(f"Diagrams must share one homology dimension, found {self.dims}")


class NonFinitePair(PipelineError):

    def __init__(self):
        super().__init__("Diagram contains essential pairs; finitize it before measuring distances")


class EpsMaxMismatch(PipelineError):

    def __init__(self, left: float, right: float):
        self.left = left
        self.right = right
        super().__init__(f"Diagrams were truncated at different scales ({left} vs {right})")


# Dynamics

class DivergedTrajectory(PipelineError):

    def __init__(self, step: int, value: float):
        self.step = step
        self.value = value
        super().__init__(f"Trajectory diverged at step {step} (|state| = {value})")


# Dataset

class MissingFile(PipelineError):

    def __init__(self, path):
        self.path = str(path)
        super().__init__(f"File not found: {self.path}")


class ParseError(PipelineError):

    def __init__(self, path, row=None, column=None, reason: str = "unparseable value"):
        self.path = str(path)
        self.row = row
        self.column = column
        where = f"row {row}" if row is not None else "file"
        if column is not None:
            where += f", column '{column}'"
        super().__init__(f"Cannot parse {self.path} ({where}): {reason}")


class ChannelCountMismatch(PipelineError):

    def __init__(self, expected: int, found: int, sample_id: str = ""):
        self.expected = expected
        self.found = found
        self.sample_id = sample_id
        super().__init__(f"Sample '{sample_id}' has {found} channels, expected {expected}")


class ChecksumMismatch(PipelineError):

    def __init__(self, path):
        self.path = str(path)
        super().__init__(f"Checksum mismatch for {self.path}")


class ManifestError(PipelineError):
    """Manifest content violates its invariants (duplicate ids, unknown labels)."""


class ClassTooSmall(PipelineError):

    def __init__(self, label: str, have: int, need: int):
        self.label = label
        self.have = have
        self.need = need
        super().__init__(f"Class '{label}' has {have} samples, needs more than {need}")


# Classification

class FingerprintMismatch(PipelineError):

    def __init__(self, left: str, right: str):
        super().__init__(f"Signatures were computed with different configs ({left[:12]} vs {right[:12]})")


class EmptyTrainSet(PipelineError):

    def __init__(self):
        super().__init__("Training set is empty")


class EmptyTestSet(PipelineError):

    def __init__(self):
        super().__init__("Evaluation needs at least one test sample per class")


class ChannelError(PipelineError):
    """A component failure inside the per-channel pipeline, annotated with the channel id."""

    def __init__(self, channel: str, cause: PipelineError):
        self.channel = channel
        self.cause = cause
        super().__init__(f"channel '{channel}': {cause}")
