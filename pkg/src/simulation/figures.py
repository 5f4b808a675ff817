"""
Reprodução do conjunto completo de perfis: série de Fourier, excitação a
partir de z, rotação a partir de y e inversão do chirp, por banda.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Sequence

import numpy as np
from tqdm import tqdm

from src.config.run_config import RunConfig
from src.core.config import settings
from src.core.errors import PulseIOError
from src.core.monitoring import metrics_snapshot
from src.core.validators import build_model
from src.formats.shapes import (
    export_fourier_csv,
    export_inversion_csv,
    export_profile_csv,
)
from src.pulses.schemas import SynthesisParams
from src.pulses.synthesis import (
    assemble_base_excitation,
    assemble_base_rotation,
    build_chirp,
    total_duration,
)
from src.simulation.bloch import (
    adiabaticity_ratio,
    excitation_profile,
    fourier_response,
    inversion_report,
)
from src.simulation.metrics import (
    CHIRP_STOPBAND_EDGE,
    INVERSION_BAND,
    PASSBAND_FRACTION,
    STOPBAND_FACTOR,
    band_metrics,
)
from src.spin.su2 import BlochVector
from src.utils.files import atomic_write_text

logger = logging.getLogger(__name__)

DEFAULT_BANDS = (0.1, 0.2, 0.4)

def _band_label(band: float) -> str:
    return f"B{band:g}".replace(".", "p")

def with_band(config: RunConfig, band: float) -> SynthesisParams:
    """Parâmetros de síntese da configuração com outra meia largura B"""
    return build_model(SynthesisParams, **{**config.synthesis.model_dump(), "band": band})

def _fourier_summary(config: RunConfig, band: float, out_dir: Path) -> Dict[str, Any]:
    params = with_band(config, band)
    offsets = config.grid.points()
    response = fourier_response(params, offsets)
    export_fourier_csv(offsets, response, config.scale, out_dir / f"fourier_{_band_label(band)}.csv")

    passband = np.abs(offsets) <= PASSBAND_FRACTION * band
    stopband = np.abs(offsets) >= STOPBAND_FACTOR * band
    return {
        "passband_ripple_rad": float(np.abs(response[passband] - params.target_angle).max()),
        "stopband_leakage_rad": float(np.abs(response[stopband]).max()),
    }

def generate_figures(
    config: RunConfig,
    bands: Sequence[float] = DEFAULT_BANDS
) -> Dict[str, Any]:
    """
    Gera um CSV por perfil e `summary.json` em config.output_dir.

    Args:
        config: Configuração da execução (output_dir obrigatório)
        bands: Meias larguras B a simular

    Returns:
        Conteúdo de summary.json
    """
    out_dir = Path(config.output_dir or ".")
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise PulseIOError(out_dir, e.strerror or str(e)) from e
    # Só a rejeição transversal da excitação é cortada na borda do chirp
    stopband_edge = None if config.ideal else CHIRP_STOPBAND_EDGE

    summary: Dict[str, Any] = {
        "nu_ref_hz": config.scale.nu_ref,
        "grid": config.grid.model_dump(),
        "ideal_inversion": config.ideal,
        "bands": {},
    }

    for band in tqdm(bands, desc="figures", disable=not settings.SHOW_PROGRESS):
        params = with_band(config, band)
        label = _band_label(band)
        excitation = assemble_base_excitation(params, config.chirp, ideal=config.ideal)
        rotation = assemble_base_rotation(params, config.chirp, ideal=config.ideal)

        from_z = excitation_profile(excitation, config.grid, BlochVector.along("z"))
        from_y = excitation_profile(rotation, config.grid, BlochVector.along("y"))
        export_profile_csv(from_z, config.scale, out_dir / f"excitation_{label}.csv")
        export_profile_csv(from_y, config.scale, out_dir / f"rotation_{label}.csv")

        summary["bands"][label] = {
            "band": band,
            "band_hz": config.scale.hertz(band),
            "fourier": _fourier_summary(config, band, out_dir),
            "excitation": band_metrics(from_z, band, stopband_edge=stopband_edge).as_dict(),
            "rotation": band_metrics(from_y, band, observable="rotation").as_dict(),
            "excitation_duration_ms": 1e3 * total_duration(excitation, config.scale),
            "rotation_duration_ms": 1e3 * total_duration(rotation, config.scale),
        }
        logger.info(f"Perfis de {label} gerados")

    report = inversion_report(build_chirp(config.chirp), config.grid)
    export_inversion_csv(report, config.scale, out_dir / "inversion.csv")
    inside = np.abs(report.offsets) <= INVERSION_BAND
    summary["inversion"] = {
        "adiabaticity_ratio": adiabaticity_ratio(config.chirp),
        "min_efficiency_in_band": float(report.efficiency[inside].min()) if inside.any() else None,
        "band": INVERSION_BAND,
    }
    summary["metrics"] = metrics_snapshot()

    atomic_write_text(out_dir / "summary.json", json.dumps(summary, indent=2) + "\n")
    return summary
