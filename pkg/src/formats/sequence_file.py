"""
Arquivo de sequência em JSON: objeto com `name` e `elements`, cada elemento
com `type` em {shaped, delay, ideal_inversion}.
"""

import logging
from pathlib import Path
from typing import Union

from pydantic import ValidationError as PydanticValidationError

from src.core.errors import FileFormatError
from src.pulses.schemas import PulseSequence
from src.utils.files import atomic_write_text, read_text

logger = logging.getLogger(__name__)

def save_sequence(seq: PulseSequence, path: Union[str, Path]) -> Path:
    """
    Grava a sequência de forma atômica.

    Raises:
        PulseIOError: Se a escrita falhar
    """
    return atomic_write_text(path, seq.model_dump_json(indent=2) + "\n")

def load_sequence(path: Union[str, Path]) -> PulseSequence:
    """
    Lê uma sequência gravada por save_sequence.

    Raises:
        PulseIOError: Se o arquivo não puder ser lido
        FileFormatError: Se o JSON ou o esquema forem inválidos
    """
    path = Path(path)
    text = read_text(path)
    try:
        seq = PulseSequence.model_validate_json(text)
    except PydanticValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(p) for p in first["loc"]) or "documento"
        raise FileFormatError(path, f"{location}: {first['msg']}") from e

    logger.debug(f"Sequência '{seq.name}' carregada com {len(seq.elements)} elementos")
    return seq
