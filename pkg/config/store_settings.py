from pydantic import BaseModel
from pydantic_settings import BaseSettings


class JSONStoreConfig(BaseModel):
    """Configuration for JSON file storage backend."""
    diagram_filename_template: str = "{stem}_{channel}_h{dim}.json"
    report_filename: str = "report.json"
    manifest_filename: str = "manifest.csv"
    indent: int = 2


class StoreSettings(BaseSettings):
    """Artifact storage configuration."""

    backend: str = "json"
    json_store: JSONStoreConfig = JSONStoreConfig()

    model_config = {
        "env_file": ".env",
        "env_prefix": "ATDA_STORE_",
        "extra": "ignore",
    }


store_settings = StoreSettings()
