"""
Exceções unificadas do base-pulse.
"""

from typing import Any, Dict, List, Optional
from prometheus_client import Counter
import logging

# Métricas
ERROR_COUNTS = Counter('base_pulse_errors_total', 'Total de erros por tipo', ['type'])

logger = logging.getLogger(__name__)

class PulseError(Exception):
    """Classe base para exceções do projeto"""
    exit_code: int = 1

    def __init__(
        self,
        message: str,
        error_code: str = "internal_error",
        details: Optional[Dict[str, Any]] = None
    ):
        self.message = message
        self.error_code = error_code
        self.details = details or {}
        super().__init__(self.message)
        ERROR_COUNTS.labels(error_code).inc()

# Erros de Validação
class InvalidArgumentError(PulseError):
    """Argumento inválido (parâmetros, eixos, durações)"""
    exit_code = 2

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            error_code="invalid_argument",
            details=details
        )

class DiscretizationError(InvalidArgumentError):
    """
    Erro lançado quando a discretização do chirp é grossa demais
    """
    def __init__(self, frequency_step: float, limit: float, n_segments: int):
        self.frequency_step = frequency_step
        self.limit = limit
        super().__init__(
            f"Discretização insuficiente: passo de frequência {frequency_step:.3g} "
            f">= {limit:.3g} com {n_segments} segmentos",
            details={
                "frequency_step": frequency_step,
                "limit": limit,
                "n_segments": n_segments
            }
        )

class UnsupportedShapeError(InvalidArgumentError):
    """Forma de onda que o formato de espectrômetro não representa"""
    def __init__(self, waveform: str, reason: str):
        super().__init__(
            f"Forma {waveform} não suportada: {reason}",
            details={"waveform": waveform, "reason": reason}
        )

# Erros de I/O
class PulseIOError(PulseError):
    """Erro de leitura ou escrita de arquivo"""
    exit_code = 3

    def __init__(self, path: Any, reason: str, error_code: str = "io_error"):
        self.path = str(path)
        super().__init__(
            message=f"{self.path}: {reason}",
            error_code=error_code,
            details={"path": self.path, "reason": reason}
        )

class FileFormatError(PulseIOError):
    """
    Erro lançado quando um arquivo não segue o formato esperado
    """
    def __init__(self, path: Any, reason: str, line: Optional[int] = None):
        if line is not None:
            reason = f"linha {line}: {reason}"
        super().__init__(path, reason, error_code="file_format_error")

# Erros de Verificação
class VerificationError(PulseError):
    """Uma ou mais verificações de invariantes falharam"""
    exit_code = 4

    def __init__(self, failed: List[str]):
        self.failed = list(failed)
        super().__init__(
            message=f"{len(self.failed)} verificação(ões) falharam: {', '.join(self.failed)}",
            error_code="verification_failed",
            details={"failed": self.failed}
        )
