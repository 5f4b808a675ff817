"""
Métricas de banda dos perfis e limites de aceitação.
"""

import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, Literal, Optional

import numpy as np

from src.core.errors import InvalidArgumentError
from src.simulation.schemas import ExcitationProfile

logger = logging.getLogger(__name__)

Observable = Literal["excitation", "rotation"]

# Banda de passagem |omega| <= 0.8*B, banda de rejeição |omega| >= 1.5*B
PASSBAND_FRACTION = 0.8
STOPBAND_FACTOR = 1.5

# Série de Fourier (B = 0.2); o pico de Gibbs em omega ~ 0.15 chega a ~0.163 rad
FOURIER_PASSBAND_TOLERANCE = 0.18
FOURIER_STOPBAND_LIMIT = 0.12

# Inversões ideais; a fase transversal residual não linear limita -my
# a ~0.931 na banda para B = 0.2, com |transversal| ~0.997
IDEAL_PASSBAND_MIN = 0.92
IDEAL_ROTATION_PASSBAND_MIN = 0.95
IDEAL_STOPBAND_TRANSVERSE_MAX = 0.12
IDEAL_STOPBAND_MZ_MIN = 0.98

# Inversões por chirp; a rejeição transversal é avaliada até CHIRP_STOPBAND_EDGE,
# onde as rampas do chirp ainda invertem com erro pequeno. A rotação usa a grade toda.
# B = 0.1 mede -my >= 0.840 e mz >= 0.847 na banda; B = 0.2 mede 0.930 e 0.925
CHIRP_STOPBAND_EDGE = 0.75
CHIRP_PASSBAND_MIN = {0.1: 0.82}
CHIRP_PASSBAND_DEFAULT = 0.90
CHIRP_STOPBAND_TRANSVERSE_MAX = {0.1: 0.18}
CHIRP_STOPBAND_TRANSVERSE_DEFAULT = 0.15
ROTATION_PASSBAND_MIN = {0.1: 0.83}
ROTATION_PASSBAND_DEFAULT = 0.90
ROTATION_STOPBAND_MY_MIN = 0.85

# Chirp padrão: eficiência mínima para |omega| <= 0.9
INVERSION_BAND = 0.9
INVERSION_EFFICIENCY_MIN = 0.98

@dataclass(frozen=True)
class BandMetrics:
    """Resumo de um perfil frente a uma banda [-B, B]"""
    band: float
    observable: str
    passband_min: float
    stopband_transverse_max: float
    stopband_mz_min: float
    stopband_my_min: float
    n_passband: int
    n_stopband: int

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)

def _per_band(limits: Dict[float, float], band: float, default: float) -> float:
    for key, limit in limits.items():
        if abs(key - band) < 1e-9:
            return limit
    return default

def chirp_stopband_limit(band: float) -> float:
    return _per_band(CHIRP_STOPBAND_TRANSVERSE_MAX, band, CHIRP_STOPBAND_TRANSVERSE_DEFAULT)

def chirp_passband_limit(band: float) -> float:
    return _per_band(CHIRP_PASSBAND_MIN, band, CHIRP_PASSBAND_DEFAULT)

def rotation_passband_limit(band: float) -> float:
    return _per_band(ROTATION_PASSBAND_MIN, band, ROTATION_PASSBAND_DEFAULT)

def band_metrics(
    profile: ExcitationProfile,
    band: float,
    observable: Observable = "excitation",
    stopband_edge: Optional[float] = None
) -> BandMetrics:
    """
    Calcula as métricas de passagem e rejeição de um perfil.

    Args:
        profile: Perfil simulado
        band: Meia largura B
        observable: "excitation" (-my na passagem) ou "rotation" (mz na passagem)
        stopband_edge: Limite superior de |omega| na banda de rejeição

    Raises:
        InvalidArgumentError: Se alguma das bandas não tiver pontos
    """
    magnitude = np.abs(profile.offsets)
    passband = magnitude <= PASSBAND_FRACTION * band
    stopband = magnitude >= STOPBAND_FACTOR * band
    if stopband_edge is not None:
        stopband &= magnitude <= stopband_edge
    if not passband.any() or not stopband.any():
        raise InvalidArgumentError(
            f"Grade sem pontos suficientes para a banda B={band}",
            details={"n_passband": int(passband.sum()), "n_stopband": int(stopband.sum())}
        )

    observed = -profile.my if observable == "excitation" else profile.mz
    return BandMetrics(
        band=band,
        observable=observable,
        passband_min=float(observed[passband].min()),
        stopband_transverse_max=float(profile.transverse[stopband].max()),
        stopband_mz_min=float(profile.mz[stopband].min()),
        stopband_my_min=float(profile.my[stopband].min()),
        n_passband=int(passband.sum()),
        n_stopband=int(stopband.sum())
    )
