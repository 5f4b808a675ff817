"""
Testes da síntese de formas de onda e sequências.
"""

import math
import sys
import unittest
from pathlib import Path

import numpy as np
from numpy.testing import assert_allclose

# Adicionar diretório raiz ao PYTHONPATH
sys.path.append(str(Path(__file__).parent.parent))

from src.core.errors import DiscretizationError, InvalidArgumentError
from src.core.validators import build_model
from src.pulses.schemas import (
    ChirpParams,
    DelayElement,
    IdealInversionElement,
    PhysicalScale,
    ShapedElement,
    SynthesisParams,
    wrap_phase,
)
from src.pulses.synthesis import (
    assemble_base_excitation,
    assemble_base_rotation,
    build_chirp,
    build_excitation_waveform,
    chirp_envelope,
    chirp_phase,
    fourier_coefficients,
    signed_amplitudes,
    total_duration,
)
from src.simulation.bloch import fourier_response

class TestFourierCoefficients(unittest.TestCase):
    def setUp(self):
        self.params = SynthesisParams(band=0.2, n=10, m=20)

    def test_reference_values(self):
        u = fourier_coefficients(self.params)
        self.assertEqual(len(u), 201)
        self.assertAlmostEqual(u[0], 0.05, places=15)
        self.assertAlmostEqual(u[1], math.sin(0.02 * math.pi) / (0.2 * math.pi), places=15)
        self.assertAlmostEqual(u[1], 0.09993, places=5)

    def test_formula_lock(self):
        """u_k*(2k*pi/N) = sin(k*B*pi/N) e 4*u_0 = B"""
        for band, n in [(0.1, 10), (0.37, 4), (0.9, 1)]:
            params = SynthesisParams(band=band, n=n, m=3)
            u = fourier_coefficients(params)
            k = np.arange(1, len(u))
            self.assertEqual(4 * u[0], band)
            assert_allclose(u[1:] * (2 * k * np.pi / n), np.sin(k * band * np.pi / n), rtol=1e-14, atol=1e-16)

    def test_small_k_limit(self):
        for band, n in [(0.1, 10), (0.2, 10), (0.4, 5)]:
            u = fourier_coefficients(SynthesisParams(band=band, n=n, m=2))
            self.assertLessEqual(abs(u[1] - band / 2), (band * np.pi / n) ** 2 * band / 12)

    def test_target_angle_scales_linearly(self):
        half = fourier_coefficients(SynthesisParams(band=0.2, target_angle=math.pi / 4))
        assert_allclose(half, 0.5 * fourier_coefficients(self.params), rtol=1e-15)

    def test_in_band_sum_at_resonance(self):
        """
        A soma parcial em omega = 0 fica abaixo de pi/2 por ~1/(M*B*pi)
        (convergência lenta da série truncada no centro da banda).
        """
        value = fourier_response(self.params, np.array([0.0]))[0]
        self.assertLess(value, math.pi / 2)
        self.assertAlmostEqual(math.pi / 2 - value, 1 / (20 * 0.2 * math.pi), delta=0.005)
        self.assertLess(abs(value - math.pi / 2) / (math.pi / 2), 0.06)

class TestExcitationWaveform(unittest.TestCase):
    def setUp(self):
        self.params = SynthesisParams(band=0.2, n=10, m=20)
        self.waveform = build_excitation_waveform(self.params)

    def test_segment_count_and_duration(self):
        self.assertEqual(len(self.waveform.segments), 401)
        self.assertAlmostEqual(self.waveform.total_duration, 401 * math.pi / 10, places=10)
        for segment in self.waveform.segments:
            self.assertEqual(segment.duration, math.pi / 10)

    def test_center_segment(self):
        """Segmento central: amplitude B/2, fase 0"""
        center = self.waveform.segments[200]
        self.assertAlmostEqual(center.amplitude, 0.1, places=15)
        self.assertEqual(center.phase, 0.0)
        self.assertEqual(self.waveform.peak_amplitude, center.amplitude)

    def test_symmetry(self):
        segments = self.waveform.segments
        for k in range(1, 201):
            self.assertEqual(segments[200 + k], segments[200 - k])

    def test_negative_lobes_use_phase_pi(self):
        w = signed_amplitudes(self.params)
        self.assertTrue((w < 0).any())
        for value, segment in zip(w, self.waveform.segments):
            self.assertEqual(segment.amplitude, abs(value))
            self.assertEqual(segment.phase, math.pi if value < 0 else 0.0)

    def test_invalid_params(self):
        for values in [{"band": 0.0}, {"band": 1.0}, {"band": 0.2, "n": 0}, {"band": 0.2, "m": 0},
                       {"band": 0.2, "target_angle": 4.0}]:
            with self.assertRaises(InvalidArgumentError):
                build_model(SynthesisParams, **values)

class TestChirp(unittest.TestCase):
    def setUp(self):
        self.params = ChirpParams()
        self.chirp = build_chirp(self.params)

    def test_default_chirp(self):
        self.assertEqual(len(self.chirp.segments), 1500)
        self.assertAlmostEqual(self.params.sweep_rate, 1 / 50, places=15)
        self.assertAlmostEqual(self.chirp.total_duration, 150.0, places=9)
        self.assertAlmostEqual(self.chirp.peak_amplitude, 0.5, places=12)

    def test_amplitude_at_center_is_peak(self):
        self.assertAlmostEqual(self.chirp.segments[750].amplitude, 0.5, places=12)
        self.assertAlmostEqual(self.chirp.segments[749].amplitude, 0.5, places=12)

    def test_flat_top_spans_unit_frequency_band(self):
        """Com rampa de 1/6, o envelope está no pico enquanto f(t) em [-1, 1]"""
        _, amplitudes, _ = self.chirp.as_arrays()
        t = (np.arange(1500) + 0.5) * 0.1
        frequency = -1.5 + t / 50
        assert_allclose(amplitudes[np.abs(frequency) <= 1.0], 0.5, atol=1e-12)
        self.assertTrue(np.all(amplitudes[np.abs(frequency) > 1.0] < 0.5))

    def test_envelope_ramps(self):
        self.assertEqual(chirp_envelope(np.array([0.0]), 1 / 6)[0], 0.0)
        assert_allclose(chirp_envelope(np.array([0.0, 0.5, 1.0]), 0.0), [1.0, 1.0, 1.0])

    def test_phase_continuity(self):
        """Fase desenrolada avança f(t)*dt entre segmentos"""
        _, _, phases = self.chirp.as_arrays()
        t = (np.arange(1500) + 0.5) * 0.1
        assert_allclose(np.diff(np.unwrap(phases)), np.diff(chirp_phase(self.params, t)), atol=1e-9)
        for segment in self.chirp.segments:
            self.assertGreaterEqual(segment.phase, 0.0)
            self.assertLess(segment.phase, 2 * math.pi)

    def test_too_coarse_raster(self):
        with self.assertRaises(DiscretizationError) as ctx:
            build_chirp(ChirpParams(n_segments=100))
        self.assertEqual(ctx.exception.exit_code, 2)

    def test_adiabaticity_ordering_enforced(self):
        with self.assertRaises(InvalidArgumentError):
            build_model(ChirpParams, freq_start=-1.5, freq_end=1.5, duration=10.0, peak_amplitude=0.3)

    def test_wrap_phase(self):
        self.assertEqual(wrap_phase(2 * math.pi), 0.0)
        self.assertAlmostEqual(wrap_phase(-math.pi / 2), 1.5 * math.pi)

class TestSequences(unittest.TestCase):
    def setUp(self):
        self.params = SynthesisParams(band=0.2, n=10, m=20)
        self.chirp = ChirpParams()
        self.scale = PhysicalScale(nu_ref=20000.0)
        self.pulse_duration = 401 * math.pi / 10

    def test_excitation_structure(self):
        seq = assemble_base_excitation(self.params, self.chirp)
        kinds = [e.type for e in seq.elements]
        self.assertEqual(kinds, ["shaped", "shaped", "delay", "shaped"])
        self.assertAlmostEqual(seq.elements[2].duration, self.pulse_duration / 2, places=9)
        self.assertAlmostEqual(seq.normalized_duration, self.pulse_duration * 1.5 + 300, places=6)
        self.assertAlmostEqual(seq.normalized_duration, 488.97, delta=0.05)

    def test_excitation_ideal(self):
        seq = assemble_base_excitation(self.params, self.chirp, ideal=True)
        self.assertIsInstance(seq.elements[1], IdealInversionElement)
        self.assertAlmostEqual(seq.normalized_duration, 188.97, delta=0.05)

    def test_rotation_structure(self):
        seq = assemble_base_rotation(self.params, self.chirp)
        self.assertEqual(len(seq.elements), 7)
        self.assertIsInstance(seq.elements[3], ShapedElement)
        self.assertIsInstance(seq.elements[1], DelayElement)
        self.assertAlmostEqual(seq.normalized_duration, 851.96, delta=0.05)
        ideal = assemble_base_rotation(self.params, self.chirp, ideal=True)
        self.assertAlmostEqual(ideal.normalized_duration, 251.96, delta=0.05)

    def test_physical_durations(self):
        """3.89 ms (excitação) e 6.77 ms (rotação) com nu_ref = 20 kHz"""
        excitation = assemble_base_excitation(self.params, self.chirp)
        rotation = assemble_base_rotation(self.params, self.chirp)
        self.assertLessEqual(abs(1e3 * total_duration(excitation, self.scale) - 3.89), 0.01)
        self.assertLessEqual(abs(1e3 * total_duration(rotation, self.scale) - 6.77), 0.01)
        delay_ms = 1e3 * self.scale.seconds(excitation.elements[2].duration)
        self.assertLessEqual(abs(delay_ms - 0.50), 0.01)

    def test_scale_validation(self):
        with self.assertRaises(InvalidArgumentError):
            build_model(PhysicalScale, nu_ref=0.0)
        self.assertEqual(self.scale.hertz(0.5), 10000.0)

if __name__ == "__main__":
    unittest.main()
