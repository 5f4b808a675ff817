"""
Métricas Prometheus do base-pulse.

Sem servidor HTTP: os contadores são gravados em arquivo texto no formato
de exposição do Prometheus (para o textfile collector do node_exporter)
e resumidos em summary.json.
"""

import logging
from pathlib import Path
from typing import Dict, Union

from prometheus_client import REGISTRY, Counter, write_to_textfile

from src.core.errors import ERROR_COUNTS, PulseIOError
from src.core.logging_config import LOG_COUNTS

logger = logging.getLogger(__name__)

OFFSETS_SIMULATED = Counter(
    'base_pulse_offsets_simulated_total',
    'Total de offsets simulados por varredura',
    ['kind']
)

COUNTERS = (ERROR_COUNTS, LOG_COUNTS, OFFSETS_SIMULATED)

def metrics_snapshot() -> Dict[str, float]:
    """Valores atuais dos contadores, chaveados como `nome{label=valor}`"""
    values: Dict[str, float] = {}
    for counter in COUNTERS:
        for metric in counter.collect():
            for sample in metric.samples:
                if not sample.name.endswith("_total"):
                    continue
                labels = ",".join(f"{k}={v}" for k, v in sorted(sample.labels.items()))
                values[f"{sample.name}{{{labels}}}"] = sample.value
    return values

def export_metrics(path: Union[str, Path]) -> Path:
    """
    Grava o registro padrão no formato texto do Prometheus.

    Raises:
        PulseIOError: Se o arquivo não puder ser escrito
    """
    path = Path(path)
    try:
        write_to_textfile(str(path), REGISTRY)
    except OSError as e:
        raise PulseIOError(path, e.strerror or str(e)) from e
    logger.debug(f"Métricas gravadas em {path}")
    return path
