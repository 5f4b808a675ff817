"""
Escrita atômica e leitura de arquivos texto.
"""

import logging
import os
import stat
import tempfile
from pathlib import Path
from typing import Union

from src.core.errors import PulseIOError

logger = logging.getLogger(__name__)

# mkstemp cria com 0600; arquivos exportados seguem a umask do processo
_UMASK = os.umask(0)
os.umask(_UMASK)

def _target_mode(path: Path) -> int:
    if path.exists():
        return stat.S_IMODE(path.stat().st_mode)
    return 0o666 & ~_UMASK

def atomic_write_text(path: Union[str, Path], text: str) -> Path:
    """
    Escreve texto UTF-8 em arquivo temporário e renomeia sobre o destino.

    Raises:
        PulseIOError: Se a escrita falhar
    """
    path = Path(path)
    temp_path = None
    try:
        directory = path.parent if str(path.parent) else Path(".")
        fd, temp_name = tempfile.mkstemp(
            prefix=f".{path.name}.", suffix=".tmp", dir=directory
        )
        temp_path = Path(temp_name)
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.chmod(temp_path, _target_mode(path))
        os.replace(temp_path, path)
    except OSError as e:
        if temp_path is not None and temp_path.exists():
            temp_path.unlink()
        raise PulseIOError(path, e.strerror or str(e)) from e

    logger.info(f"Arquivo escrito: {path}")
    return path

def read_text(path: Union[str, Path]) -> str:
    """
    Lê arquivo texto UTF-8.

    Raises:
        PulseIOError: Se o arquivo não puder ser lido
    """
    path = Path(path)
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise PulseIOError(path, getattr(e, "strerror", None) or str(e)) from e
