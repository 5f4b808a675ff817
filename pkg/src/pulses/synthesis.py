"""
Síntese das formas de onda e das sequências BASE.

Excitação: série de Fourier de cossenos cujo valor é o ângulo alvo dentro de
[-B, B] e zero fora. Refocalização: varredura dupla Theta * D(T/2) * Theta.
"""

import logging
import math
from typing import List

import numpy as np

from src.core.errors import DiscretizationError
from src.pulses.schemas import (
    ChirpParams,
    DelayElement,
    IdealInversionElement,
    PhysicalScale,
    PulseSegment,
    PulseSequence,
    ShapedElement,
    SynthesisParams,
    Waveform,
    wrap_phase,
)

logger = logging.getLogger(__name__)

# Passo de frequência máximo por segmento, relativo à amplitude de pico
MAX_FREQUENCY_STEP = 0.01

def fourier_coefficients(params: SynthesisParams) -> np.ndarray:
    """
    Coeficientes u_0..u_K (K = M*N) da série de cossenos.

    Para o ângulo pi/2: u_0 = B/4 e u_k = sin(k*B*pi/N) / (2*k*pi/N).
    Outros ângulos escalam linearmente.

    Args:
        params: Parâmetros de síntese

    Returns:
        Array com K+1 coeficientes
    """
    n = params.n
    band = params.band
    k = np.arange(1, params.n_coefficients + 1, dtype=float)
    scale = params.target_angle / (math.pi / 2)

    coefficients = np.empty(params.n_coefficients + 1, dtype=float)
    coefficients[0] = band / 4
    coefficients[1:] = np.sin(k * band * np.pi / n) / (2 * k * np.pi / n)
    if scale != 1.0:
        coefficients *= scale
    return coefficients

def signed_amplitudes(params: SynthesisParams) -> np.ndarray:
    """Amplitudes com sinal w_{-K}..w_K, com w_0 = 2*u_0"""
    u = fourier_coefficients(params)
    return np.concatenate([u[:0:-1], [2.0 * u[0]], u[1:]])

def build_excitation_waveform(params: SynthesisParams) -> Waveform:
    """
    Pulso de excitação com 2K+1 segmentos de duração pi/N.

    Coeficientes negativos viram amplitude |w| com fase pi.
    """
    dt = params.time_step
    segments = [
        PulseSegment(
            duration=dt,
            amplitude=abs(float(w)),
            phase=math.pi if w < 0 else 0.0
        )
        for w in signed_amplitudes(params)
    ]
    waveform = Waveform(
        name=f"base-excitation B={params.band:g} N={params.n} M={params.m}",
        segments=segments
    )
    logger.debug(
        f"Pulso de excitação: {len(segments)} segmentos, "
        f"T={waveform.total_duration:.6f}"
    )
    return waveform

def chirp_envelope(fraction: np.ndarray, ramp_fraction: float) -> np.ndarray:
    """Envelope com rampas de meio seno e topo plano, fraction em [0, 1]"""
    fraction = np.asarray(fraction, dtype=float)
    if ramp_fraction <= 0:
        return np.ones_like(fraction)
    rise = np.clip(fraction / ramp_fraction, 0.0, 1.0)
    fall = np.clip((1.0 - fraction) / ramp_fraction, 0.0, 1.0)
    return np.sin(0.5 * np.pi * np.minimum(rise, fall))

def chirp_phase(params: ChirpParams, t: np.ndarray) -> np.ndarray:
    """Fase acumulada phi(t) = f0*t + (taxa/2)*t^2"""
    rate = (params.freq_end - params.freq_start) / params.duration
    t = np.asarray(t, dtype=float)
    return params.freq_start * t + 0.5 * rate * t * t

def build_chirp(params: ChirpParams) -> Waveform:
    """
    Chirp linear em frequência, realizado como modulação de fase.

    Raises:
        DiscretizationError: Se o passo de frequência por segmento for
            >= 1% da amplitude de pico
    """
    step = abs(params.freq_end - params.freq_start) / params.n_segments
    limit = MAX_FREQUENCY_STEP * params.peak_amplitude
    if step >= limit:
        raise DiscretizationError(step, limit, params.n_segments)

    dt = params.duration / params.n_segments
    midpoints = (np.arange(params.n_segments, dtype=float) + 0.5) * dt
    amplitudes = params.peak_amplitude * chirp_envelope(
        midpoints / params.duration, params.ramp_fraction
    )
    phases = chirp_phase(params, midpoints)

    segments = [
        PulseSegment(duration=dt, amplitude=float(a), phase=wrap_phase(p))
        for a, p in zip(amplitudes, phases)
    ]
    return Waveform(
        name=(
            f"chirp {params.freq_start:g}->{params.freq_end:g} "
            f"T={params.duration:g} A={params.peak_amplitude:g}"
        ),
        segments=segments
    )

def _inversion(chirp: ChirpParams, ideal: bool):
    if ideal:
        return IdealInversionElement()
    return ShapedElement(waveform=build_chirp(chirp))

def assemble_base_excitation(
    params: SynthesisParams,
    chirp: ChirpParams,
    ideal: bool = False
) -> PulseSequence:
    """
    Excitação seletiva: [pulso, Theta, D(T/2), Theta].
    """
    excitation = build_excitation_waveform(params)
    theta = _inversion(chirp, ideal)
    elements: List = [
        ShapedElement(waveform=excitation),
        theta,
        DelayElement(duration=0.5 * excitation.total_duration),
        theta,
    ]
    return PulseSequence(
        name=f"base-excitation B={params.band:g}{' ideal' if ideal else ''}",
        elements=elements
    )

def assemble_base_rotation(
    params: SynthesisParams,
    chirp: ChirpParams,
    ideal: bool = False
) -> PulseSequence:
    """
    Rotação seletiva em x: [Theta, D(T/2), Theta, pulso, Theta, D(T/2), Theta].
    """
    excitation = build_excitation_waveform(params)
    theta = _inversion(chirp, ideal)
    delay = DelayElement(duration=0.5 * excitation.total_duration)
    elements: List = [
        theta, delay, theta,
        ShapedElement(waveform=excitation),
        theta, delay, theta,
    ]
    return PulseSequence(
        name=f"base-rotation B={params.band:g}{' ideal' if ideal else ''}",
        elements=elements
    )

def total_duration(seq: PulseSequence, scale: PhysicalScale) -> float:
    """Duração física da sequência em segundos"""
    return scale.seconds(seq.normalized_duration)
