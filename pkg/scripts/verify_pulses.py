"""
Script para executar a suíte de verificação dos pulsos
"""
import sys
from pathlib import Path

# Adicionar diretório raiz do projeto ao PYTHONPATH
project_root = Path(__file__).parent.parent
sys.path.append(str(project_root))

from src.core.diagnostics import run_diagnostics
from src.core.logging_config import setup_logging

if __name__ == "__main__":
    setup_logging()
    success = run_diagnostics()
    sys.exit(0 if success else 4)
