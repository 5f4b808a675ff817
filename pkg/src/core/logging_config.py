"""
Configuração unificada de logging com métricas e formatação personalizada.
"""

import logging
import logging.config
from pathlib import Path
from typing import Any, Dict, Optional, Union
from prometheus_client import Counter

from src.core.config import settings
from src.core.errors import InvalidArgumentError

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# Métricas
LOG_COUNTS = Counter('base_pulse_log_total', 'Total de logs por nível', ['level'])

class MetricsHandler(logging.Handler):
    """Handler que incrementa métricas Prometheus"""
    def emit(self, record):
        LOG_COUNTS.labels(record.levelname.lower()).inc()

class CustomFormatter(logging.Formatter):
    """Formatador com cores por nível"""

    COLORS = {
        'DEBUG': '\033[36m',     # Cyan
        'INFO': '\033[32m',      # Green
        'WARNING': '\033[33m',   # Yellow
        'ERROR': '\033[31m',     # Red
        'CRITICAL': '\033[41m',  # Red background
    }
    RESET = '\033[0m'

    def format(self, record):
        levelname = record.levelname
        if levelname in self.COLORS:
            record.levelname_colored = f"{self.COLORS[levelname]}{levelname}{self.RESET}"
        else:
            record.levelname_colored = levelname
        return super().format(record)

def build_logging_config(
    level: str,
    json_format: bool,
    log_file: Optional[Path]
) -> Dict[str, Any]:
    """Monta o dicionário para logging.config.dictConfig"""
    formatter = 'json' if json_format else 'detailed'
    handlers: Dict[str, Any] = {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': formatter,
            'stream': 'ext://sys.stderr'
        },
        'metrics': {
            '()': MetricsHandler
        }
    }
    if log_file is not None:
        handlers['file'] = {
            'class': 'logging.FileHandler',
            'filename': str(log_file),
            'formatter': 'json',
            'encoding': 'utf-8'
        }

    return {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'detailed': {
                '()': CustomFormatter,
                'format': '%(asctime)s [%(levelname_colored)s] %(name)s: %(message)s'
            },
            'json': {
                '()': 'pythonjsonlogger.jsonlogger.JsonFormatter',
                'fmt': '%(asctime)s %(name)s %(levelname)s %(message)s'
            }
        },
        'handlers': handlers,
        'loggers': {
            'src': {
                'level': level.upper(),
                'handlers': list(handlers),
                'propagate': False
            }
        }
    }

def setup_logging(
    level: Optional[str] = None,
    json_format: Optional[bool] = None,
    log_file: Optional[Union[str, Path]] = None
) -> None:
    """
    Configura logging com handlers personalizados e métricas.

    Args:
        level: Nível de log (padrão: settings.LOG_LEVEL)
        json_format: Usa JsonFormatter (padrão: settings.LOG_JSON)
        log_file: Arquivo de log opcional (padrão: settings.LOG_FILE)

    Raises:
        InvalidArgumentError: Nível desconhecido ou handler que não pode ser criado
    """
    level = (level or settings.LOG_LEVEL).upper()
    if level not in LOG_LEVELS:
        raise InvalidArgumentError(
            f"Nível de log inválido: {level}",
            details={"choices": list(LOG_LEVELS)}
        )
    config = build_logging_config(
        level=level,
        json_format=settings.LOG_JSON if json_format is None else json_format,
        log_file=Path(log_file) if log_file else settings.LOG_FILE
    )
    try:
        logging.config.dictConfig(config)
    except ValueError as e:
        raise InvalidArgumentError(f"Configuração de logging inválida: {e}") from e

    logger = logging.getLogger(__name__)
    logger.debug('Logging configurado com sucesso')
