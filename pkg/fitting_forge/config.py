from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file='.env',
        env_ignore_empty=True,
        extra='ignore'
    )

    # Application
    LOG_LEVEL: str = "WARNING"

    # ===== WORKERS =====
    FITTING_FORGE_THREADS: int = Field(default=1, ge=1)

    # ===== SEARCH BUDGETS =====
    DEFAULT_MAX_ROUNDS: int = Field(default=8, ge=1)  # huli_driver, per branch
    DEFAULT_MAX_DEPTH: int = Field(default=8, ge=1)  # vz_process
    DEFAULT_ALPHA_MAX: int = Field(default=6, ge=1)  # moody_dominates

    # ===== MINORS =====
    MAX_MINOR_SIZE: int = 6  # bigger minors still work, they just get a warning


settings = Settings()
