"""
Schemas de pulsos, sequências e escala física.
"""

import math
from typing import Annotated, List, Literal, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

TWO_PI = 2.0 * math.pi

def wrap_phase(phase: float) -> float:
    """Reduz a fase para [0, 2*pi)"""
    wrapped = float(phase) % TWO_PI
    return 0.0 if wrapped >= TWO_PI else wrapped

class SynthesisParams(BaseModel):
    """
    Parâmetros do pulso de excitação por série de Fourier.
    """
    model_config = ConfigDict(frozen=True)

    band: float = Field(
        ...,
        description="Meia largura da banda B (frequência normalizada)",
        gt=0.0,
        lt=1.0
    )
    n: int = Field(10, description="Passo de tempo dt = pi/N", ge=1)
    m: int = Field(20, description="Meia duração T/2 = M*pi", ge=1)
    target_angle: float = Field(
        math.pi / 2,
        description="Ângulo de rotação alvo dentro da banda (rad)",
        gt=0.0,
        le=math.pi
    )

    @property
    def n_coefficients(self) -> int:
        """K = M*N"""
        return self.m * self.n

    @property
    def time_step(self) -> float:
        return math.pi / self.n

class ChirpParams(BaseModel):
    """
    Parâmetros da varredura adiabática (chirp linear).
    """
    model_config = ConfigDict(frozen=True)

    freq_start: float = Field(-1.5, description="Frequência inicial normalizada")
    freq_end: float = Field(1.5, description="Frequência final normalizada")
    duration: float = Field(150.0, description="Duração normalizada", gt=0.0)
    peak_amplitude: float = Field(0.5, description="Amplitude de pico", gt=0.0)
    ramp_fraction: float = Field(
        1.0 / 6.0,
        description="Fração da duração usada em cada rampa de amplitude",
        ge=0.0,
        lt=0.5
    )
    n_segments: int = Field(1500, description="Número de segmentos", ge=1)

    @model_validator(mode="after")
    def validate_adiabaticity(self) -> "ChirpParams":
        rate = abs(self.freq_end - self.freq_start) / self.duration
        if rate >= self.peak_amplitude ** 2:
            raise ValueError(
                f"taxa de varredura {rate:.4g} deve ser menor que A^2 = "
                f"{self.peak_amplitude ** 2:.4g}"
            )
        return self

    @property
    def sweep_rate(self) -> float:
        return abs(self.freq_end - self.freq_start) / self.duration

class PulseSegment(BaseModel):
    """Segmento de RF constante: u = A*exp(-i*theta)"""
    model_config = ConfigDict(frozen=True)

    duration: float = Field(..., gt=0.0)
    amplitude: float = Field(..., ge=0.0)
    phase: float = Field(0.0, ge=0.0, lt=TWO_PI)

class Waveform(BaseModel):
    """Forma de onda constante por partes"""
    model_config = ConfigDict(frozen=True)

    name: str = "waveform"
    segments: List[PulseSegment] = Field(..., min_length=1)

    @property
    def total_duration(self) -> float:
        return math.fsum(s.duration for s in self.segments)

    @property
    def peak_amplitude(self) -> float:
        return max(s.amplitude for s in self.segments)

    def as_arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(durações, amplitudes, fases) como arrays"""
        durations = np.array([s.duration for s in self.segments], dtype=float)
        amplitudes = np.array([s.amplitude for s in self.segments], dtype=float)
        phases = np.array([s.phase for s in self.segments], dtype=float)
        return durations, amplitudes, phases

    def complex_samples(self) -> np.ndarray:
        """u_k = A_k * exp(-i*theta_k)"""
        _, amplitudes, phases = self.as_arrays()
        return amplitudes * np.exp(-1j * phases)

class ShapedElement(BaseModel):
    """Pulso com forma de onda"""
    model_config = ConfigDict(frozen=True)

    type: Literal["shaped"] = "shaped"
    waveform: Waveform

    @property
    def duration(self) -> float:
        return self.waveform.total_duration

class DelayElement(BaseModel):
    """Evolução livre"""
    model_config = ConfigDict(frozen=True)

    type: Literal["delay"] = "delay"
    duration: float = Field(..., ge=0.0)

class IdealInversionElement(BaseModel):
    """Inversão instantânea exp(-i*pi*Ix)"""
    model_config = ConfigDict(frozen=True)

    type: Literal["ideal_inversion"] = "ideal_inversion"

    @property
    def duration(self) -> float:
        return 0.0

SequenceElement = Annotated[
    Union[ShapedElement, DelayElement, IdealInversionElement],
    Field(discriminator="type")
]

class PulseSequence(BaseModel):
    """Sequência ordenada de elementos"""
    model_config = ConfigDict(frozen=True)

    name: str = "sequence"
    elements: List[SequenceElement] = Field(..., min_length=1)

    @property
    def normalized_duration(self) -> float:
        return math.fsum(e.duration for e in self.elements)

class PhysicalScale(BaseModel):
    """
    Escala física: omega normalizado = 1 corresponde a nu_ref Hz.
    Uma unidade de tempo normalizado vale 1/(2*pi*nu_ref) s.
    """
    model_config = ConfigDict(frozen=True)

    nu_ref: float = Field(20000.0, description="Hz por unidade de omega", gt=0.0)

    def seconds(self, normalized_time: float) -> float:
        return normalized_time / (TWO_PI * self.nu_ref)

    def hertz(self, normalized_frequency):
        return normalized_frequency * self.nu_ref
