"""
Interface de linha de comando do base-pulse.

Códigos de saída: 0 sucesso, 2 argumentos inválidos, 3 erro de I/O,
4 falha de verificação.
"""

import argparse
import logging
import math
import sys
from pathlib import Path
from typing import Callable, List, Optional

from src.config.run_config import RunConfig
from src.core.config import settings
from src.core.diagnostics import verify
from src.core.errors import InvalidArgumentError, PulseError, PulseIOError
from src.core.logging_config import LOG_LEVELS, setup_logging
from src.core.monitoring import export_metrics
from src.core.validators import build_model
from src.formats.sequence_file import load_sequence, save_sequence
from src.formats.shapes import (
    export_inversion_csv,
    export_profile_csv,
    export_shape_spectrometer,
    export_waveform_csv,
)
from src.pulses.schemas import (
    ChirpParams,
    PhysicalScale,
    ShapedElement,
    SynthesisParams,
    Waveform,
)
from src.pulses.synthesis import (
    assemble_base_excitation,
    assemble_base_rotation,
    build_chirp,
    build_excitation_waveform,
    total_duration,
)
from src.simulation.bloch import adiabaticity_ratio, excitation_profile, inversion_report
from src.simulation.figures import DEFAULT_BANDS, generate_figures
from src.simulation.schemas import OffsetGrid
from src.spin.su2 import BlochVector

logger = logging.getLogger(__name__)

INITIAL_STATES = ["x", "y", "z", "-x", "-y", "-z"]

# Argumentos compartilhados

def _add_synthesis_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("síntese")
    group.add_argument("--band", type=float, default=0.2, help="Meia largura B (0 < B < 1)")
    group.add_argument("--n", type=int, default=10, help="Passo de tempo pi/N")
    group.add_argument("--m", type=int, default=20, help="Meia duração M*pi")
    group.add_argument("--angle", type=float, default=math.pi / 2, help="Ângulo alvo (rad)")

def _add_chirp_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("chirp")
    group.add_argument("--start", type=float, default=-1.5, help="Frequência inicial")
    group.add_argument("--end", type=float, default=1.5, help="Frequência final")
    group.add_argument("--duration", type=float, default=150.0, help="Duração normalizada")
    group.add_argument("--amp", type=float, default=0.5, help="Amplitude de pico")
    group.add_argument("--ramp-fraction", type=float, default=1.0 / 6.0, help="Fração de rampa")
    group.add_argument("--segments", type=int, default=1500, help="Número de segmentos")

def _add_grid_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--omega-min", type=float, default=settings.OMEGA_MIN)
    parser.add_argument("--omega-max", type=float, default=settings.OMEGA_MAX)
    parser.add_argument("--points", type=int, default=settings.GRID_POINTS)

def _add_scale_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--nu-ref", type=float, default=settings.NU_REF,
        help="Hz correspondentes a omega normalizado = 1"
    )

def _add_format_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=["csv", "jcamp"], default="csv",
        help="csv (# base-shape v1) ou jcamp (forma de espectrômetro)"
    )

# Construção dos parâmetros validados

def _synthesis(args: argparse.Namespace) -> SynthesisParams:
    return build_model(SynthesisParams, band=args.band, n=args.n, m=args.m, target_angle=args.angle)

def _chirp(args: argparse.Namespace) -> ChirpParams:
    return build_model(
        ChirpParams,
        freq_start=args.start,
        freq_end=args.end,
        duration=args.duration,
        peak_amplitude=args.amp,
        ramp_fraction=args.ramp_fraction,
        n_segments=args.segments
    )

def _scale(args: argparse.Namespace) -> PhysicalScale:
    return build_model(PhysicalScale, nu_ref=getattr(args, "nu_ref", settings.NU_REF))

def _grid(args: argparse.Namespace) -> OffsetGrid:
    return build_model(
        OffsetGrid, omega_min=args.omega_min, omega_max=args.omega_max, n_points=args.points
    )

def _run_config(args: argparse.Namespace, **values) -> RunConfig:
    """RunConfig com as partes presentes no subcomando"""
    parts = {"scale": _scale(args)}
    if hasattr(args, "band"):
        parts["synthesis"] = _synthesis(args)
    if hasattr(args, "start"):
        parts["chirp"] = _chirp(args)
    if hasattr(args, "points"):
        parts["grid"] = _grid(args)
    return build_model(RunConfig, **parts, **values)

def _write_waveform(w: Waveform, config: RunConfig, fmt: str) -> Path:
    if fmt == "jcamp":
        return export_shape_spectrometer(w, config.output, config.scale)
    return export_waveform_csv(w, config.output)

# Subcomandos

def cmd_synth(args: argparse.Namespace) -> int:
    config = _run_config(args, output=args.out)
    waveform = build_excitation_waveform(config.synthesis)
    path = _write_waveform(waveform, config, args.format)
    logger.info(f"{len(waveform.segments)} segmentos escritos em {path}")
    return 0

def cmd_chirp(args: argparse.Namespace) -> int:
    config = _run_config(args, output=args.out)
    waveform = build_chirp(config.chirp)
    path = _write_waveform(waveform, config, args.format)
    logger.info(f"{len(waveform.segments)} segmentos escritos em {path}")
    return 0

def cmd_sequence(args: argparse.Namespace) -> int:
    config = _run_config(args, output=args.out, ideal=args.ideal)
    assemble = assemble_base_excitation if args.kind == "excitation" else assemble_base_rotation
    seq = assemble(config.synthesis, config.chirp, ideal=config.ideal)
    save_sequence(seq, config.output)
    logger.info(
        f"Sequência '{seq.name}' com {len(seq.elements)} elementos, "
        f"{1e3 * total_duration(seq, config.scale):.3f} ms"
    )
    return 0

def cmd_profile(args: argparse.Namespace) -> int:
    config = _run_config(args, output=args.out)
    seq = load_sequence(args.seq)
    profile = excitation_profile(seq, config.grid, BlochVector.along(args.initial))
    export_profile_csv(profile, config.scale, config.output)
    return 0

def cmd_info(args: argparse.Namespace, stream=None) -> int:
    stream = stream or sys.stdout
    scale = _scale(args)
    seq = load_sequence(args.seq)

    print(f"sequence: {seq.name}", file=stream)
    print(f"{'#':>3}  {'type':<16}{'duration':>12}{'ms':>10}{'segments':>10}{'peak (Hz)':>12}", file=stream)
    for index, element in enumerate(seq.elements):
        duration = element.duration
        if isinstance(element, ShapedElement):
            segments = str(len(element.waveform.segments))
            peak = f"{scale.hertz(element.waveform.peak_amplitude):.1f}"
        else:
            segments, peak = "-", "-"
        print(
            f"{index:>3}  {element.type:<16}{duration:>12.4f}"
            f"{1e3 * scale.seconds(duration):>10.4f}{segments:>10}{peak:>12}",
            file=stream
        )
    print(f"total duration: {1e3 * total_duration(seq, scale):.3f} ms", file=stream)
    return 0

def cmd_verify(args: argparse.Namespace) -> int:
    verify(seed=args.seed)
    return 0

def cmd_figures(args: argparse.Namespace) -> int:
    try:
        bands = [float(b) for b in args.bands.split(",") if b.strip()]
    except ValueError as e:
        raise InvalidArgumentError(f"--bands inválido: {args.bands}") from e
    if not bands:
        raise InvalidArgumentError("--bands vazio")

    config = _run_config(args, output_dir=args.out_dir, ideal=args.ideal)
    summary = generate_figures(config, bands)
    for label, entry in summary["bands"].items():
        print(
            f"{label}: excitation -my min {entry['excitation']['passband_min']:.4f}, "
            f"rotation mz min {entry['rotation']['passband_min']:.4f}"
        )
    return 0

def cmd_inversion(args: argparse.Namespace) -> int:
    config = _run_config(args, output=args.out)
    report = inversion_report(build_chirp(config.chirp), config.grid)
    export_inversion_csv(report, config.scale, config.output)
    print(f"adiabaticity ratio: {adiabaticity_ratio(config.chirp):.4f}")
    return 0

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="base-pulse",
        description="Excitação seletiva em banda: síntese, simulação e exportação de pulsos"
    )
    parser.add_argument(
        "--log-level", type=str.upper, choices=LOG_LEVELS, default=None,
        help="Nível de log (padrão: BASE_PULSE_LOG_LEVEL)"
    )
    parser.add_argument("--log-json", action="store_true", help="Logs em JSON")
    parser.add_argument(
        "--metrics-file", type=Path, default=None,
        help="Grava os contadores Prometheus ao final (padrão: BASE_PULSE_METRICS_FILE)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable[[argparse.Namespace], int], help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("synth", cmd_synth, "Escreve o pulso de excitação")
    _add_synthesis_args(p)
    _add_scale_arg(p)
    _add_format_arg(p)
    p.add_argument("--out", type=Path, required=True)

    p = add("chirp", cmd_chirp, "Escreve o chirp de inversão")
    _add_chirp_args(p)
    _add_scale_arg(p)
    _add_format_arg(p)
    p.add_argument("--out", type=Path, required=True)

    p = add("sequence", cmd_sequence, "Escreve uma sequência BASE")
    p.add_argument("--kind", choices=["excitation", "rotation"], default="excitation")
    p.add_argument("--ideal", action="store_true", help="Inversões ideais instantâneas")
    _add_synthesis_args(p)
    _add_chirp_args(p)
    _add_scale_arg(p)
    p.add_argument("--out", type=Path, required=True)

    p = add("profile", cmd_profile, "Simula o perfil de uma sequência")
    p.add_argument("--seq", type=Path, required=True)
    _add_grid_args(p)
    p.add_argument("--initial", choices=INITIAL_STATES, default="z")
    _add_scale_arg(p)
    p.add_argument("--out", type=Path, required=True)

    p = add("info", cmd_info, "Mostra elementos e duração física")
    p.add_argument("--seq", type=Path, required=True)
    _add_scale_arg(p)

    p = add("verify", cmd_verify, "Executa a suíte de verificação")
    p.add_argument("--seed", type=int, default=None)

    p = add("figures", cmd_figures, "Reproduz todos os perfis em CSV")
    p.add_argument("--out-dir", type=Path, required=True)
    p.add_argument("--bands", default=",".join(f"{b:g}" for b in DEFAULT_BANDS))
    p.add_argument("--ideal", action="store_true")
    _add_grid_args(p)
    _add_scale_arg(p)
    _add_synthesis_args(p)
    _add_chirp_args(p)

    p = add("inversion", cmd_inversion, "Relatório de inversão do chirp")
    _add_chirp_args(p)
    _add_grid_args(p)
    _add_scale_arg(p)
    p.add_argument("--out", type=Path, required=True)

    return parser

def _report(e: PulseError) -> int:
    logger.debug(f"{e.error_code}: {e.details}")
    print(f"erro: {e.message}", file=sys.stderr)
    return e.exit_code

def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        setup_logging(level=args.log_level, json_format=True if args.log_json else None)
        code = args.handler(args)
    except PulseError as e:
        code = _report(e)

    metrics_file = args.metrics_file or settings.METRICS_FILE
    if metrics_file is not None:
        try:
            export_metrics(metrics_file)
        except PulseIOError as e:
            failed = _report(e)
            code = code or failed
    return code

def main_entry() -> None:
    """Ponto de entrada do script `base-pulse`"""
    sys.exit(main())

if __name__ == "__main__":
    main_entry()
