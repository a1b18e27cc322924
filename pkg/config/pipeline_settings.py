from typing import Literal, Optional

from pydantic_settings import BaseSettings


class PipelineSettings(BaseSettings):

    # Logging
    log_level: str = "INFO"
    log_format: str = "%(asctime)s %(levelname)s %(name)s | %(message)s"
    log_to_file: bool = False
    log_file_path: str = "logs/attractor_tda.log"

    # Embedding
    embedding_dimension: int = 3
    embedding_delay: Optional[int] = None  # None: estimate per channel
    max_points: int = 150

    # Filtration
    eps_max: Optional[float] = None  # None: cloud diameter
    temporal_links: bool = True
    reduction: Literal["dual", "twist"] = "dual"

    # Diagrams
    threshold_fraction: float = 0.1
    keep_zero_persistence: bool = False

    # Integration
    dt: float = 0.01
    n_steps: int = 6000
    burn_in: int = 1000
    divergence_bound: float = 1e6

    # Classification protocol
    n_splits: int = 100
    test_per_class: int = 5
    k: int = 1
    seed: int = 0
    zscore: bool = False

    # Workers for signatures and distance rows
    threads: int = 1

    model_config = {
        "env_file": ".env",
        "env_prefix": "ATDA_",
        "extra": "ignore",
    }


settings = PipelineSettings()
