"""
Configuração de uma execução completa (síntese, chirp, escala, grade e saídas).
"""

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from src.core.config import settings
from src.pulses.schemas import ChirpParams, PhysicalScale, SynthesisParams
from src.simulation.schemas import OffsetGrid

def default_grid() -> OffsetGrid:
    return OffsetGrid(
        omega_min=settings.OMEGA_MIN,
        omega_max=settings.OMEGA_MAX,
        n_points=settings.GRID_POINTS
    )

def default_scale() -> PhysicalScale:
    return PhysicalScale(nu_ref=settings.NU_REF)

class RunConfig(BaseModel):
    """Parâmetros validados de uma execução da CLI"""
    model_config = ConfigDict(frozen=True)

    synthesis: SynthesisParams = Field(default_factory=lambda: SynthesisParams(band=0.2))
    chirp: ChirpParams = Field(default_factory=ChirpParams)
    scale: PhysicalScale = Field(default_factory=default_scale)
    grid: OffsetGrid = Field(default_factory=default_grid)
    ideal: bool = False
    output: Optional[Path] = None
    output_dir: Optional[Path] = None
