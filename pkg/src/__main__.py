"""
Permite `python -m src`.
"""
import sys

from pydantic import ValidationError

try:
    from src.cli import main
except ValidationError as e:
    # Variáveis BASE_PULSE_* inválidas são rejeitadas na importação das configurações
    print(f"erro: configuração inválida: {e}", file=sys.stderr)
    sys.exit(2)

sys.exit(main())
