"""
Tipos de resultado das simulações.
"""

from dataclasses import dataclass
from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.spin.su2 import BlochVector

class OffsetGrid(BaseModel):
    """Grade uniforme de offsets, incluindo os extremos"""
    model_config = ConfigDict(frozen=True)

    omega_min: float = -1.0
    omega_max: float = 1.0
    n_points: int = Field(801, ge=2)

    @model_validator(mode="after")
    def validate_range(self) -> "OffsetGrid":
        if not self.omega_min < self.omega_max:
            raise ValueError(
                f"omega_min ({self.omega_min}) deve ser menor que omega_max ({self.omega_max})"
            )
        return self

    def points(self) -> np.ndarray:
        return np.linspace(self.omega_min, self.omega_max, self.n_points)

@dataclass(frozen=True)
class ExcitationProfile:
    """Vetores de Bloch finais por offset"""
    offsets: np.ndarray
    bloch: np.ndarray  # (n, 3): mx, my, mz
    initial_state: BlochVector
    sequence_name: str

    def __post_init__(self):
        if self.bloch.shape != (len(self.offsets), 3):
            raise ValueError(
                f"bloch deve ter forma ({len(self.offsets)}, 3), tem {self.bloch.shape}"
            )

    @property
    def mx(self) -> np.ndarray:
        return self.bloch[:, 0]

    @property
    def my(self) -> np.ndarray:
        return self.bloch[:, 1]

    @property
    def mz(self) -> np.ndarray:
        return self.bloch[:, 2]

    @property
    def transverse(self) -> np.ndarray:
        return np.hypot(self.mx, self.my)

    def vectors(self) -> List[BlochVector]:
        return [BlochVector.from_array(v) for v in self.bloch]

@dataclass(frozen=True)
class InversionReport:
    """Diagnóstico de inversão z -> -z de um chirp"""
    offsets: np.ndarray
    efficiency: np.ndarray
    euler_alpha: np.ndarray
    euler_beta: np.ndarray
