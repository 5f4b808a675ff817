"""
Exportação e importação de formas de onda e perfis.

Formatos:
- CSV de forma (`# base-shape v1`): duração,amplitude,fase (rad)
- Forma estilo JCAMP para espectrômetro: amplitude em % do máximo, fase em graus
- CSV de perfil: offset_hz,mx,my,mz
- CSV de inversão: offset_hz,efficiency,alpha,beta
- CSV da série de Fourier: offset_hz,response_rad
"""

import logging
import math
from pathlib import Path
from typing import List, Optional, Union

import numpy as np

from src.core.errors import FileFormatError, UnsupportedShapeError
from src.pulses.schemas import PhysicalScale, PulseSegment, Waveform
from src.simulation.schemas import ExcitationProfile, InversionReport
from src.spin.su2 import BlochVector
from src.utils.files import atomic_write_text, read_text

logger = logging.getLogger(__name__)

SHAPE_HEADER = "# base-shape v1"
PROFILE_HEADER = "offset_hz,mx,my,mz"
INVERSION_HEADER = "offset_hz,efficiency,alpha,beta"
FOURIER_HEADER = "offset_hz,response_rad"

PathLike = Union[str, Path]

def format_number(value: float) -> str:
    """
    12 casas decimais quando isso reproduz o valor exatamente; senão a
    representação mais curta que reproduz o float.
    """
    value = float(value)
    fixed = f"{value:.12f}"
    if float(fixed) == value:
        return fixed
    return repr(value)

def format_sample(value: float) -> str:
    """Ao menos 15 dígitos significativos"""
    return f"{float(value):.15g}"

def _lines_to_text(lines: List[str]) -> str:
    return "\n".join(lines) + "\n"

def export_waveform_csv(w: Waveform, path: PathLike) -> Path:
    """
    Exporta forma de onda como CSV `# base-shape v1`.

    Raises:
        PulseIOError: Se a escrita falhar
    """
    lines = [SHAPE_HEADER]
    lines.extend(
        f"{format_number(s.duration)},{format_number(s.amplitude)},{format_number(s.phase)}"
        for s in w.segments
    )
    return atomic_write_text(path, _lines_to_text(lines))

def load_waveform_csv(path: PathLike, name: Optional[str] = None) -> Waveform:
    """
    Importa CSV `# base-shape v1`.

    Raises:
        PulseIOError: Se o arquivo não puder ser lido
        FileFormatError: Se o conteúdo for inválido
    """
    path = Path(path)
    lines = read_text(path).splitlines()
    if not lines or lines[0] != SHAPE_HEADER:
        raise FileFormatError(path, f"cabeçalho esperado '{SHAPE_HEADER}'", line=1)

    segments = []
    for number, line in enumerate(lines[1:], start=2):
        fields = line.split(",")
        if len(fields) != 3:
            raise FileFormatError(path, f"esperados 3 campos, encontrados {len(fields)}", line=number)
        try:
            duration, amplitude, phase = (float(f) for f in fields)
            segments.append(PulseSegment(duration=duration, amplitude=amplitude, phase=phase))
        except ValueError as e:
            raise FileFormatError(path, str(e).splitlines()[0], line=number) from e

    if not segments:
        raise FileFormatError(path, "nenhum segmento")
    return Waveform(name=name or path.stem, segments=segments)

def export_shape_spectrometer(
    w: Waveform,
    path: PathLike,
    scale: Optional[PhysicalScale] = None
) -> Path:
    """
    Exporta forma estilo JCAMP: amplitude em % do máximo e fase em graus.

    Raises:
        UnsupportedShapeError: Se os segmentos não tiverem a mesma duração
            ou se a amplitude máxima for zero
    """
    scale = scale or PhysicalScale()
    durations, amplitudes, phases = w.as_arrays()
    if not np.allclose(durations, durations[0], rtol=1e-12, atol=0.0):
        raise UnsupportedShapeError(w.name, "segmentos com durações diferentes")
    peak = float(amplitudes.max())
    if peak <= 0:
        raise UnsupportedShapeError(w.name, "amplitude máxima nula")

    lines = [
        f"##TITLE= {w.name}",
        "##JCAMP-DX= 5.00",
        "##DATA TYPE= Shape Data",
        "##ORIGIN= base-pulse",
        f"##$SHAPE_AMPLITUDE= {format_sample(scale.hertz(peak))}",
        f"##$SHAPE_DWELL= {format_sample(scale.seconds(float(durations[0])))}",
        f"##NPOINTS= {len(w.segments)}",
        "##XYPOINTS= (XY..XY)",
    ]
    for amplitude, phase in zip(amplitudes, phases):
        degrees = f"{math.degrees(phase) % 360.0:.6f}"
        if degrees == "360.000000":
            degrees = "0.000000"
        lines.append(f"{100.0 * amplitude / peak:.6f}, {degrees}")
    lines.append("##END=")
    return atomic_write_text(path, _lines_to_text(lines))

def export_profile_csv(p: ExcitationProfile, scale: PhysicalScale, path: PathLike) -> Path:
    """Exporta perfil como CSV offset_hz,mx,my,mz"""
    lines = [PROFILE_HEADER]
    offsets_hz = scale.hertz(p.offsets)
    lines.extend(
        ",".join(format_sample(v) for v in (offset, mx, my, mz))
        for offset, (mx, my, mz) in zip(offsets_hz, p.bloch)
    )
    return atomic_write_text(path, _lines_to_text(lines))

def load_profile_csv(
    path: PathLike,
    scale: PhysicalScale,
    initial: BlochVector,
    name: Optional[str] = None
) -> ExcitationProfile:
    """
    Importa CSV de perfil (offsets convertidos de volta para unidades normalizadas).

    Raises:
        FileFormatError: Se o conteúdo for inválido
    """
    path = Path(path)
    lines = read_text(path).splitlines()
    if not lines or lines[0] != PROFILE_HEADER:
        raise FileFormatError(path, f"cabeçalho esperado '{PROFILE_HEADER}'", line=1)
    try:
        rows = np.array([[float(f) for f in line.split(",")] for line in lines[1:]], dtype=float)
    except ValueError as e:
        raise FileFormatError(path, str(e)) from e
    if rows.ndim != 2 or rows.shape[1] != 4:
        raise FileFormatError(path, "esperadas 4 colunas")
    return ExcitationProfile(
        offsets=rows[:, 0] / scale.nu_ref,
        bloch=rows[:, 1:],
        initial_state=initial,
        sequence_name=name or path.stem
    )

def export_inversion_csv(report: InversionReport, scale: PhysicalScale, path: PathLike) -> Path:
    """Exporta relatório de inversão como CSV"""
    lines = [INVERSION_HEADER]
    lines.extend(
        ",".join(format_sample(v) for v in row)
        for row in zip(
            scale.hertz(report.offsets),
            report.efficiency,
            report.euler_alpha,
            report.euler_beta
        )
    )
    return atomic_write_text(path, _lines_to_text(lines))

def export_fourier_csv(
    offsets: np.ndarray,
    response: np.ndarray,
    scale: PhysicalScale,
    path: PathLike
) -> Path:
    """Exporta a série de Fourier como CSV offset_hz,response_rad"""
    lines = [FOURIER_HEADER]
    lines.extend(
        f"{format_sample(offset)},{format_sample(value)}"
        for offset, value in zip(scale.hertz(np.asarray(offsets)), response)
    )
    return atomic_write_text(path, _lines_to_text(lines))
