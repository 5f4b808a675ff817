"""
Configurações do base-pulse
"""
from pathlib import Path
from typing import Literal, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    """Configurações globais (variáveis BASE_PULSE_* ou arquivo .env)"""

    model_config = SettingsConfigDict(
        env_prefix="BASE_PULSE_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore"
    )

    # Escala física: frequência (Hz) correspondente a omega normalizado = 1
    NU_REF: float = Field(default=20000.0, gt=0)

    # Grade de offsets padrão
    GRID_POINTS: int = Field(default=801, ge=2)
    OMEGA_MIN: float = -1.0
    OMEGA_MAX: float = 1.0

    # Paralelismo da varredura (não altera resultados)
    THREADS: int = Field(default=1, ge=1)
    CHUNK_SIZE: int = Field(default=256, ge=1)

    # Logging
    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "INFO"
    LOG_JSON: bool = False
    LOG_FILE: Optional[Path] = None

    # Arquivo texto com os contadores Prometheus, gravado ao fim de cada comando
    METRICS_FILE: Optional[Path] = None

    # Barras de progresso em varreduras longas
    SHOW_PROGRESS: bool = False

    # Semente das verificações aleatórias
    VERIFY_SEED: int = 20240517

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def upper_log_level(cls, v):
        return v.upper() if isinstance(v, str) else v

# Instância global
settings = Settings()
