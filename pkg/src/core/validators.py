"""
Validadores e checagens unificadas.
"""

import logging
import math
from typing import Any, Sequence, Type, TypeVar

from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError

from src.core.errors import InvalidArgumentError

logger = logging.getLogger(__name__)

ModelT = TypeVar("ModelT", bound=BaseModel)

UNIT_TOLERANCE = 1e-9

def build_model(model_cls: Type[ModelT], **values: Any) -> ModelT:
    """
    Constrói um modelo pydantic convertendo erros de validação.

    Args:
        model_cls: Classe do modelo
        **values: Campos do modelo

    Returns:
        Instância validada

    Raises:
        InvalidArgumentError: Se algum campo for inválido
    """
    try:
        return model_cls(**values)
    except PydanticValidationError as e:
        errors = [
            f"{'.'.join(str(p) for p in err['loc']) or model_cls.__name__}: {err['msg']}"
            for err in e.errors()
        ]
        raise InvalidArgumentError(
            f"{model_cls.__name__} inválido: {'; '.join(errors)}",
            details={"errors": errors}
        ) from e

def validate_unit_vector(vector: Sequence[float], name: str = "axis") -> None:
    """Exige |vector| = 1 dentro de 1e-9"""
    if len(vector) != 3:
        raise InvalidArgumentError(
            f"{name} deve ter 3 componentes, tem {len(vector)}",
            details={name: list(vector)}
        )
    norm = math.sqrt(sum(float(c) * float(c) for c in vector))
    if not math.isfinite(norm) or abs(norm - 1.0) > UNIT_TOLERANCE:
        raise InvalidArgumentError(
            f"{name} deve ser unitário, |{name}| = {norm!r}",
            details={name: list(vector), "norm": norm}
        )

def validate_non_negative(value: float, name: str) -> None:
    """Exige valor finito e >= 0"""
    if not math.isfinite(value) or value < 0:
        raise InvalidArgumentError(
            f"{name} deve ser finito e não negativo, recebido {value!r}",
            details={name: value}
        )
