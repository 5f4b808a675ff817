"""
Suíte de verificação: invariantes de todos os módulos e critérios de aceitação.
"""
import logging
import math
import sys
import tempfile
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, TextIO, Tuple

import numpy as np
from scipy.linalg import expm
from tqdm import tqdm

from src.core.config import settings
from src.core.errors import VerificationError
from src.core.monitoring import metrics_snapshot
from src.formats.sequence_file import load_sequence, save_sequence
from src.formats.shapes import (
    export_shape_spectrometer,
    export_waveform_csv,
    load_waveform_csv,
)
from src.pulses.schemas import (
    ChirpParams,
    DelayElement,
    IdealInversionElement,
    PhysicalScale,
    PulseSequence,
    SynthesisParams,
)
from src.pulses.synthesis import (
    assemble_base_excitation,
    assemble_base_rotation,
    build_chirp,
    build_excitation_waveform,
    chirp_phase,
    fourier_coefficients,
    total_duration,
)
from src.simulation.bloch import (
    adiabaticity_ratio,
    excitation_profile,
    first_order_prediction,
    fourier_response,
    inversion_report,
    riemann_response,
    sequence_propagator,
    sequence_propagators,
    waveform_propagators,
)
from src.simulation.metrics import (
    CHIRP_STOPBAND_EDGE,
    FOURIER_PASSBAND_TOLERANCE,
    FOURIER_STOPBAND_LIMIT,
    IDEAL_PASSBAND_MIN,
    IDEAL_ROTATION_PASSBAND_MIN,
    IDEAL_STOPBAND_MZ_MIN,
    IDEAL_STOPBAND_TRANSVERSE_MAX,
    INVERSION_BAND,
    INVERSION_EFFICIENCY_MIN,
    PASSBAND_FRACTION,
    ROTATION_STOPBAND_MY_MIN,
    STOPBAND_FACTOR,
    band_metrics,
    chirp_passband_limit,
    chirp_stopband_limit,
    rotation_passband_limit,
)
from src.simulation.schemas import OffsetGrid
from src.spin.su2 import (
    BlochVector,
    EulerZxz,
    Spinor,
    Su2Rotation,
    apply_to_bloch,
    compose,
    euler_zxz,
    propagator_const,
    rotation_distance,
    rotation_from_axis_angle,
)

logger = logging.getLogger(__name__)

# Matrizes de spin I = sigma/2
IX = 0.5 * np.array([[0, 1], [1, 0]], dtype=complex)
IY = 0.5 * np.array([[0, -1j], [1j, 0]], dtype=complex)
IZ = 0.5 * np.array([[1, 0], [0, -1]], dtype=complex)

REFERENCE_BANDS = (0.1, 0.2, 0.4)
EXCITATION_MS = 3.89
ROTATION_MS = 6.77
DURATION_TOLERANCE_MS = 0.01

def hamiltonian(omega: float, amplitude: float, phase: float) -> np.ndarray:
    return omega * IZ + amplitude * (math.cos(phase) * IX + math.sin(phase) * IY)

def random_rotation(rng: np.random.Generator) -> Su2Rotation:
    return Su2Rotation.from_array(rng.normal(size=4))

def random_bloch(rng: np.random.Generator) -> BlochVector:
    v = rng.normal(size=3)
    return BlochVector.from_array(v / np.linalg.norm(v))

def spinor_from_bloch(v: BlochVector) -> Spinor:
    theta = math.acos(max(-1.0, min(1.0, v.mz)))
    phi = math.atan2(v.my, v.mx)
    return Spinor(complex(math.cos(0.5 * theta)), complex(np.exp(1j * phi) * math.sin(0.5 * theta)))

class PulseDiagnostics:
    """
    Executa as verificações e acumula falhas no formato
    {"type": nome, "message": texto}.
    """

    def __init__(
        self,
        seed: Optional[int] = None,
        grid_points: int = 801,
        show_progress: Optional[bool] = None
    ):
        self.seed = settings.VERIFY_SEED if seed is None else seed
        self.grid = OffsetGrid(n_points=grid_points)
        self.show_progress = settings.SHOW_PROGRESS if show_progress is None else show_progress
        self.errors: List[Dict[str, Any]] = []
        self.passed: List[str] = []
        self.timings: Dict[str, float] = {}

        self.params = SynthesisParams(band=0.2, n=10, m=20)
        self.chirp = ChirpParams()
        self.scale = PhysicalScale(nu_ref=20000.0)

    @property
    def checks(self) -> List[Tuple[str, Callable[[], None]]]:
        return [
            ("su2_unitarity", self._check_unitarity),
            ("su2_sign_convention", self._check_sign_convention),
            ("su2_matrix_exponential", self._check_matrix_exponential),
            ("su2_refinement", self._check_refinement),
            ("su2_euler_round_trip", self._check_euler_round_trip),
            ("su2_bloch_consistency", self._check_bloch_consistency),
            ("synthesis_coefficients", self._check_coefficients),
            ("synthesis_waveform", self._check_waveform_structure),
            ("synthesis_chirp", self._check_chirp),
            ("synthesis_durations", self._check_durations),
            ("simulator_fourier_response", self._check_fourier_response),
            ("simulator_refocusing", self._check_refocusing),
            ("simulator_ideal_profiles", self._check_ideal_profiles),
            ("simulator_first_order", self._check_first_order),
            ("simulator_determinism", self._check_determinism),
            ("simulator_inversion", self._check_inversion),
            ("simulator_chirp_excitation", self._check_chirp_excitation),
            ("simulator_chirp_rotation", self._check_chirp_rotation),
            ("io_round_trips", self._check_round_trips),
        ]

    @property
    def failed_checks(self) -> List[str]:
        return sorted({e["type"] for e in self.errors})

    def _expect(self, condition: bool, name: str, message: str) -> None:
        if not condition:
            self.errors.append({"type": name, "message": message})
            logger.error(f"[{name}] {message}")

    def run_full_diagnostic(self) -> bool:
        """Executa todas as verificações; True se nenhuma falhar"""
        checks = self.checks
        for name, check in tqdm(checks, desc="verify", disable=not self.show_progress):
            started = time.perf_counter()
            errors_before = len(self.errors)
            try:
                check()
            except Exception as e:
                logger.exception(f"Erro durante verificação {name}")
                self.errors.append({"type": name, "message": f"exceção: {e}"})
            self.timings[name] = time.perf_counter() - started
            if len(self.errors) == errors_before:
                self.passed.append(name)
            logger.debug(f"{name}: {self.timings[name]:.3f}s")
        return len(self.errors) == 0

    # su2-core

    def _check_unitarity(self):
        rng = np.random.default_rng(self.seed)
        worst = 0.0
        for _ in range(200):
            omega, amplitude = rng.uniform(-2, 2), rng.uniform(0, 2)
            r = propagator_const(omega, amplitude, rng.uniform(0, 2 * np.pi), rng.uniform(0, 50))
            r = compose(r, random_rotation(rng))
            worst = max(worst, abs(r.norm() - 1.0), abs(np.linalg.det(r.matrix()) - 1.0))
        self._expect(worst <= 1e-12, "su2_unitarity", f"desvio de norma {worst:.3e}")

    def _check_sign_convention(self):
        z = BlochVector.along("z")
        flipped = apply_to_bloch(rotation_from_axis_angle((1, 0, 0), math.pi / 2), z)
        self._expect(
            np.allclose(flipped.as_array(), [0, -1, 0], atol=1e-12),
            "su2_sign_convention", f"Rx(pi/2) leva z a {flipped}, esperado -y"
        )
        inverted = apply_to_bloch(propagator_const(0.0, math.pi, 0.0, 1.0), z)
        self._expect(
            abs(inverted.mz + 1.0) < 1e-12,
            "su2_sign_convention", f"pulso pi leva z a {inverted}"
        )
        oracle = Su2Rotation.from_matrix(expm(-1j * (math.pi / 2) * IZ))
        r = rotation_from_axis_angle((0, 0, 1), math.pi / 2)
        self._expect(
            rotation_distance(r, oracle) < 1e-12,
            "su2_sign_convention", "Rz(pi/2) diverge de expm"
        )

    def _check_matrix_exponential(self):
        rng = np.random.default_rng(self.seed + 1)
        worst = 0.0
        for _ in range(100):
            omega, amplitude, phase = rng.uniform(-2, 2), rng.uniform(0, 2), rng.uniform(0, 2 * np.pi)
            duration = rng.uniform(0, 20)
            oracle = expm(-1j * duration * hamiltonian(omega, amplitude, phase))
            r = propagator_const(omega, amplitude, phase, duration)
            worst = max(worst, float(np.abs(r.matrix() - oracle).max()))
        self._expect(worst < 1e-10, "su2_matrix_exponential", f"erro máximo {worst:.3e}")

    def _check_refinement(self):
        rng = np.random.default_rng(self.seed + 2)
        worst = 0.0
        for _ in range(20):
            omega, amplitude, phase = rng.uniform(-2, 2), rng.uniform(0, 2), rng.uniform(0, 2 * np.pi)
            duration = rng.uniform(0.1, 10)
            whole = propagator_const(omega, amplitude, phase, duration)
            for n in (2, 7, 32):
                step = propagator_const(omega, amplitude, phase, duration / n)
                total = Su2Rotation.identity()
                for _ in range(n):
                    total = compose(step, total)
                worst = max(worst, float(np.abs(total.as_array() - whole.as_array()).max()))
        self._expect(worst < 1e-9, "su2_refinement", f"erro máximo {worst:.3e}")

    def _check_euler_round_trip(self):
        rng = np.random.default_rng(self.seed + 3)
        worst = 0.0
        for _ in range(1000):
            r = random_rotation(rng)
            angles = euler_zxz(r)
            self._expect(
                0.0 <= angles.gamma <= math.pi,
                "su2_euler_round_trip", f"gamma fora de [0, pi]: {angles.gamma}"
            )
            worst = max(worst, rotation_distance(angles.to_rotation(), r))
        self._expect(worst < 1e-10, "su2_euler_round_trip", f"distância máxima {worst:.3e}")

        inversion = euler_zxz(rotation_from_axis_angle((1, 0, 0), math.pi))
        self._expect(
            abs(inversion.gamma - math.pi) < 1e-12 and inversion.alpha == 0.0 and inversion.beta == 0.0,
            "su2_euler_round_trip", f"exp(-i*pi*Ix) decomposto como {inversion}"
        )

    def _check_bloch_consistency(self):
        rng = np.random.default_rng(self.seed + 4)
        worst = 0.0
        for _ in range(200):
            r, v = random_rotation(rng), random_bloch(rng)
            direct = apply_to_bloch(r, v).as_array()
            via_spinor = r.apply_to_spinor(spinor_from_bloch(v)).to_bloch().as_array()
            worst = max(worst, float(np.abs(direct - via_spinor).max()))
        self._expect(worst < 1e-10, "su2_bloch_consistency", f"divergência {worst:.3e}")

    # waveform-synthesis

    def _check_coefficients(self):
        for band, n in ((0.1, 10), (0.2, 10), (0.4, 7), (0.35, 3)):
            params = SynthesisParams(band=band, n=n, m=5)
            u = fourier_coefficients(params)
            k = np.arange(1, len(u))
            self._expect(4 * u[0] == band, "synthesis_coefficients", f"4*u_0 != B para B={band}")
            self._expect(
                np.allclose(u[1:] * (2 * k * np.pi / n), np.sin(k * band * np.pi / n), rtol=1e-14, atol=1e-16),
                "synthesis_coefficients", f"fórmula de u_k violada para B={band}, N={n}"
            )
            taylor = (band * np.pi / n) ** 2 * band / 12
            self._expect(
                abs(u[1] - band / 2) <= taylor,
                "synthesis_coefficients", f"|u_1 - B/2| > {taylor:.3e} para B={band}"
            )
        u = fourier_coefficients(self.params)
        self._expect(abs(u[0] - 0.05) < 1e-15, "synthesis_coefficients", f"u_0 = {u[0]}")
        self._expect(abs(u[1] - 0.09993) < 1e-5, "synthesis_coefficients", f"u_1 = {u[1]}")

    def _check_waveform_structure(self):
        w = build_excitation_waveform(self.params)
        k = self.params.n_coefficients
        _, amplitudes, phases = w.as_arrays()
        self._expect(len(w.segments) == 2 * k + 1, "synthesis_waveform", f"{len(w.segments)} segmentos")
        self._expect(
            bool(np.array_equal(amplitudes, amplitudes[::-1]) and np.array_equal(phases, phases[::-1])),
            "synthesis_waveform", "forma de onda não é simétrica"
        )
        center = w.segments[k]
        self._expect(
            abs(center.amplitude - 0.1) < 1e-15 and center.phase == 0.0,
            "synthesis_waveform", f"segmento central {center}"
        )
        expected = (2 * k + 1) * math.pi / self.params.n
        self._expect(
            abs(w.total_duration - expected) < 1e-9,
            "synthesis_waveform", f"duração {w.total_duration} != {expected}"
        )

    def _check_chirp(self):
        chirp = build_chirp(self.chirp)
        durations, amplitudes, phases = chirp.as_arrays()
        self._expect(
            abs(self.chirp.sweep_rate - 1 / 50) < 1e-15 and abs(adiabaticity_ratio(self.chirp) - 0.08) < 1e-12,
            "synthesis_chirp", f"taxa {self.chirp.sweep_rate}, razão {adiabaticity_ratio(self.chirp)}"
        )
        self._expect(
            len(chirp.segments) == self.chirp.n_segments and np.allclose(durations, 0.1),
            "synthesis_chirp", "raster do chirp incorreto"
        )

        dt = float(durations[0])
        midpoints = (np.arange(len(durations)) + 0.5) * dt
        frequency = self.chirp.freq_start + self.chirp.sweep_rate * midpoints
        flat = np.abs(frequency) <= 1.0
        self._expect(
            bool(np.all(np.abs(amplitudes[flat] - 0.5) < 1e-12)) and abs(amplitudes.max() - 0.5) < 1e-12,
            "synthesis_chirp", "envelope fora do pico dentro de f em [-1, 1]"
        )

        steps = np.diff(np.unwrap(phases))
        expected = np.diff(chirp_phase(self.chirp, midpoints))
        jump = float(np.abs(steps - expected).max())
        self._expect(jump < 1e-9, "synthesis_chirp", f"fase descontínua: {jump:.3e}")

    def _check_durations(self):
        excitation = assemble_base_excitation(self.params, self.chirp)
        rotation = assemble_base_rotation(self.params, self.chirp)
        excitation_ms = 1e3 * total_duration(excitation, self.scale)
        rotation_ms = 1e3 * total_duration(rotation, self.scale)
        delay = excitation.elements[2]
        delay_ms = 1e3 * self.scale.seconds(delay.duration)
        self._expect(
            abs(excitation_ms - EXCITATION_MS) <= DURATION_TOLERANCE_MS,
            "synthesis_durations", f"excitação {excitation_ms:.4f} ms"
        )
        self._expect(
            abs(rotation_ms - ROTATION_MS) <= DURATION_TOLERANCE_MS,
            "synthesis_durations", f"rotação {rotation_ms:.4f} ms"
        )
        self._expect(abs(delay_ms - 0.5) <= 0.01, "synthesis_durations", f"atraso {delay_ms:.4f} ms")
        self._expect(
            len(excitation.elements) == 4 and len(rotation.elements) == 7,
            "synthesis_durations", "estrutura das sequências incorreta"
        )

    # bloch-simulator

    def _check_fourier_response(self):
        offsets = self.grid.points()
        response = fourier_response(self.params, offsets)
        band = self.params.band
        passband = np.abs(offsets) <= PASSBAND_FRACTION * band
        stopband = np.abs(offsets) >= STOPBAND_FACTOR * band
        ripple = float(np.abs(response[passband] - np.pi / 2).max())
        leakage = float(np.abs(response[stopband]).max())
        self._expect(
            ripple <= FOURIER_PASSBAND_TOLERANCE,
            "simulator_fourier_response", f"ondulação na banda {ripple:.4f} rad"
        )
        self._expect(
            leakage <= FOURIER_STOPBAND_LIMIT,
            "simulator_fourier_response", f"vazamento fora da banda {leakage:.4f} rad"
        )
        self._expect(
            bool(np.array_equal(response, response[::-1])) or np.allclose(response, response[::-1], atol=1e-13),
            "simulator_fourier_response", "resposta não é par"
        )

        dense = np.linspace(-1, 1, 1001)
        direct = riemann_response(build_excitation_waveform(self.params), dense)
        difference = float(np.abs(direct - fourier_response(self.params, dense)).max())
        self._expect(
            difference < 1e-10,
            "simulator_fourier_response", f"soma de Riemann diverge em {difference:.3e}"
        )

    def _check_refocusing(self):
        rng = np.random.default_rng(self.seed + 5)
        half = 0.5 * build_excitation_waveform(self.params).total_duration
        worst = 0.0
        for _ in range(100):
            theta = EulerZxz(
                alpha=rng.uniform(-np.pi, np.pi), gamma=math.pi, beta=rng.uniform(-np.pi, np.pi)
            ).to_rotation()
            for omega in np.linspace(-1, 1, 11):
                delay = propagator_const(omega, 0.0, 0.0, half)
                double_sweep = compose(theta, compose(delay, theta))
                reversed_delay = rotation_from_axis_angle((0, 0, 1), -omega * half)
                worst = max(worst, rotation_distance(double_sweep, reversed_delay))
        self._expect(worst < 1e-10, "simulator_refocusing", f"distância máxima {worst:.3e}")

        seq = PulseSequence(
            name="ideal-double-sweep",
            elements=[DelayElement(duration=half), IdealInversionElement(),
                      DelayElement(duration=half), IdealInversionElement()]
        )
        r = sequence_propagator(seq, 0.37)
        self._expect(
            rotation_distance(r, Su2Rotation.identity()) < 1e-12,
            "simulator_refocusing", "atraso não refocalizado pela varredura dupla"
        )

    def _check_ideal_profiles(self):
        excitation = assemble_base_excitation(self.params, self.chirp, ideal=True)
        rotation = assemble_base_rotation(self.params, self.chirp, ideal=True)
        from_z = excitation_profile(excitation, self.grid, BlochVector.along("z"))
        rotation_from_z = excitation_profile(rotation, self.grid, BlochVector.along("z"))
        rotation_from_y = excitation_profile(rotation, self.grid, BlochVector.along("y"))

        for profile in (from_z, rotation_from_z, rotation_from_y):
            drift = float(np.abs(np.linalg.norm(profile.bloch, axis=1) - 1.0).max())
            self._expect(drift <= 1e-9, "simulator_ideal_profiles", f"norma de Bloch desvia {drift:.3e}")

        metrics = band_metrics(from_z, self.params.band)
        self._expect(
            metrics.passband_min >= IDEAL_PASSBAND_MIN,
            "simulator_ideal_profiles", f"-my mínimo na banda {metrics.passband_min:.4f}"
        )
        self._expect(
            metrics.stopband_transverse_max <= IDEAL_STOPBAND_TRANSVERSE_MAX,
            "simulator_ideal_profiles", f"transversal fora da banda {metrics.stopband_transverse_max:.4f}"
        )
        self._expect(
            metrics.stopband_mz_min >= IDEAL_STOPBAND_MZ_MIN,
            "simulator_ideal_profiles", f"mz fora da banda {metrics.stopband_mz_min:.4f}"
        )

        mismatch = float(np.abs(rotation_from_z.bloch - from_z.bloch).max())
        self._expect(
            mismatch <= 1e-9,
            "simulator_ideal_profiles", f"rotação e excitação divergem a partir de z: {mismatch:.3e}"
        )
        rotated = band_metrics(rotation_from_y, self.params.band, observable="rotation")
        self._expect(
            rotated.passband_min >= IDEAL_ROTATION_PASSBAND_MIN,
            "simulator_ideal_profiles", f"mz mínimo na banda (rotação) {rotated.passband_min:.4f}"
        )

        mz = from_z.mz
        mx = from_z.mx
        self._expect(
            np.allclose(mz, mz[::-1], atol=1e-9) and np.allclose(mx, -mx[::-1], atol=1e-9),
            "simulator_ideal_profiles", "perfil não é par em mz / ímpar em mx"
        )

    def _check_first_order(self):
        params = SynthesisParams(band=0.2, n=10, m=20, target_angle=math.pi / 20)
        offsets = self.grid.points()
        offsets = offsets[np.abs(offsets) <= PASSBAND_FRACTION * params.band]
        q = waveform_propagators(build_excitation_waveform(params), offsets)
        exact = np.hypot(q[:, 1], q[:, 2])
        predicted = first_order_prediction(params, offsets)
        error = float(np.abs(exact / predicted - 1.0).max())
        self._expect(error <= 0.01, "simulator_first_order", f"erro relativo {error:.4f}")

    def _check_determinism(self):
        seq = assemble_base_excitation(self.params, self.chirp)
        serial = sequence_propagators(seq, self.grid, threads=1)
        parallel = sequence_propagators(seq, self.grid, threads=4)
        again = sequence_propagators(seq, self.grid, threads=1)
        self._expect(
            bool(np.array_equal(serial, parallel) and np.array_equal(serial, again)),
            "simulator_determinism", "resultado depende do paralelismo"
        )

    def _check_inversion(self):
        report = inversion_report(build_chirp(self.chirp), self.grid)
        self._expect(
            bool(np.all((report.efficiency >= 0.0) & (report.efficiency <= 1.0))),
            "simulator_inversion", "eficiência fora de [0, 1]"
        )
        inside = np.abs(report.offsets) <= INVERSION_BAND
        worst = float(report.efficiency[inside].min())
        self._expect(
            worst >= INVERSION_EFFICIENCY_MIN,
            "simulator_inversion", f"eficiência mínima {worst:.4f} em |omega| <= {INVERSION_BAND}"
        )
        center = float(report.efficiency[np.argmin(np.abs(report.offsets))])
        self._expect(center >= 0.999, "simulator_inversion", f"eficiência em omega=0: {center:.6f}")

    def _check_chirp_excitation(self):
        for band in REFERENCE_BANDS:
            seq = assemble_base_excitation(SynthesisParams(band=band), self.chirp)
            profile = excitation_profile(seq, self.grid, BlochVector.along("z"))
            metrics = band_metrics(profile, band, stopband_edge=CHIRP_STOPBAND_EDGE)
            limit = chirp_stopband_limit(band)
            self._expect(
                metrics.passband_min >= chirp_passband_limit(band),
                "simulator_chirp_excitation", f"B={band}: -my mínimo {metrics.passband_min:.4f}"
            )
            self._expect(
                metrics.stopband_transverse_max <= limit,
                "simulator_chirp_excitation",
                f"B={band}: transversal fora da banda {metrics.stopband_transverse_max:.4f} > {limit}"
            )

    def _check_chirp_rotation(self):
        for band in REFERENCE_BANDS:
            seq = assemble_base_rotation(SynthesisParams(band=band), self.chirp)
            profile = excitation_profile(seq, self.grid, BlochVector.along("y"))
            metrics = band_metrics(profile, band, observable="rotation")
            self._expect(
                metrics.passband_min >= rotation_passband_limit(band),
                "simulator_chirp_rotation", f"B={band}: mz mínimo {metrics.passband_min:.4f}"
            )
            self._expect(
                metrics.stopband_my_min >= ROTATION_STOPBAND_MY_MIN,
                "simulator_chirp_rotation", f"B={band}: my mínimo fora da banda {metrics.stopband_my_min:.4f}"
            )

    # pulse-io-cli

    def _check_round_trips(self):
        waveform = build_excitation_waveform(self.params)
        chirp = build_chirp(self.chirp)
        sequence = assemble_base_rotation(self.params, self.chirp)
        with tempfile.TemporaryDirectory() as tmp:
            tmp_path = Path(tmp)
            for w in (waveform, chirp):
                path = export_waveform_csv(w, tmp_path / "shape.csv")
                loaded = load_waveform_csv(path, name=w.name)
                self._expect(loaded.model_dump() == w.model_dump(), "io_round_trips", f"CSV de '{w.name}' não reproduz os valores")

            path = save_sequence(sequence, tmp_path / "sequence.json")
            self._expect(load_sequence(path).model_dump() == sequence.model_dump(), "io_round_trips", "arquivo de sequência não reproduz os valores")

            path = export_shape_spectrometer(chirp, tmp_path / "chirp.jdx", self.scale)
            lines = path.read_text(encoding="utf-8").splitlines()
            data = [line for line in lines if not line.startswith("##")]
            self._expect(
                f"##NPOINTS= {self.chirp.n_segments}" in lines and len(data) == self.chirp.n_segments,
                "io_round_trips", "forma JCAMP com número de pontos incorreto"
            )

    def print_report(self, stream: TextIO = sys.stdout):
        """Imprime relatório das verificações"""
        print("\n=== Relatório de Verificação ===", file=stream)
        for name in self.passed:
            print(f"✅ {name} ({self.timings.get(name, 0.0):.2f}s)", file=stream)
        if self.errors:
            print("\nFalhas:", file=stream)
            for error in self.errors:
                print(f"❌ {error['type']}: {error['message']}", file=stream)
        simulated = sum(
            value for key, value in metrics_snapshot().items()
            if key.startswith("base_pulse_offsets_simulated_total")
        )
        print(f"\nOffsets simulados: {simulated:.0f}", file=stream)

def run_diagnostics(seed: Optional[int] = None, stream: TextIO = sys.stdout) -> bool:
    """Executa a suíte e imprime o relatório"""
    diagnostics = PulseDiagnostics(seed=seed)
    success = diagnostics.run_full_diagnostic()
    diagnostics.print_report(stream)
    return success

def verify(seed: Optional[int] = None, stream: TextIO = sys.stdout) -> None:
    """
    Executa a suíte completa.

    Raises:
        VerificationError: Com a lista de verificações que falharam
    """
    diagnostics = PulseDiagnostics(seed=seed)
    success = diagnostics.run_full_diagnostic()
    diagnostics.print_report(stream)
    if not success:
        raise VerificationError(diagnostics.failed_checks)
