from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

type AlgorithmName = Literal["linear", "ideals", "auto"]


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="ORDERCHECK_",
        extra="ignore",
    )

    app_env: str = "development"
    log_level: str = "INFO"

    jobs: int = Field(default=1, ge=1)
    algorithm: AlgorithmName = "auto"
    auto_linear_max_elements: int = Field(default=6, ge=1)

    max_generate_elements: int = Field(default=12, ge=1, le=16)
    max_request_elements: int = Field(default=10, ge=1, le=16)
    units_per_shard: int = Field(default=64, ge=1)
    checkpoint_interval: int = Field(default=8, ge=1)
    digraph6_batch_size: int = Field(default=256, ge=1)


settings = Settings()
