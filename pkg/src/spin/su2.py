"""
Álgebra exata de rotações de spin 1/2 (SU(2)).

Rotações são guardadas como quaternions unitários (w, x, y, z), correspondendo
à matriz [[w - iz, -y - ix], [y - ix, w + iz]] = exp(-i*angle*(n.I)) com
I = sigma/2. Fase global não é representada: q e -q são a mesma rotação.
"""

import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np

from src.core.validators import validate_non_negative, validate_unit_vector

logger = logging.getLogger(__name__)

ArrayLike = Union[Sequence[float], np.ndarray]

NORM_TOLERANCE = 1e-12
GIMBAL_TOLERANCE = 1e-12

@dataclass(frozen=True)
class Spinor:
    """Estado puro |psi> = (c_up, c_down)"""
    c_up: complex
    c_down: complex

    @classmethod
    def up(cls) -> "Spinor":
        return cls(1.0 + 0j, 0j)

    def normalized(self) -> "Spinor":
        norm = math.sqrt(abs(self.c_up) ** 2 + abs(self.c_down) ** 2)
        return Spinor(self.c_up / norm, self.c_down / norm)

    def as_array(self) -> np.ndarray:
        return np.array([self.c_up, self.c_down], dtype=complex)

    def to_bloch(self) -> "BlochVector":
        """Converte para vetor de Bloch (mx, my, mz)"""
        cross = np.conj(self.c_up) * self.c_down
        return BlochVector(
            mx=float(2.0 * cross.real),
            my=float(2.0 * cross.imag),
            mz=float(abs(self.c_up) ** 2 - abs(self.c_down) ** 2)
        )

@dataclass(frozen=True)
class BlochVector:
    """Vetor de Bloch de um estado puro"""
    mx: float
    my: float
    mz: float

    _AXES = {
        "x": (1.0, 0.0, 0.0),
        "y": (0.0, 1.0, 0.0),
        "z": (0.0, 0.0, 1.0),
    }

    @classmethod
    def along(cls, label: str) -> "BlochVector":
        """Vetor unitário a partir de 'x', 'y', 'z', '-x', '-y' ou '-z'"""
        sign = -1.0 if label.startswith("-") else 1.0
        axis = cls._AXES[label.lstrip("+-")]
        return cls(*(sign * c for c in axis))

    @classmethod
    def from_array(cls, values: ArrayLike) -> "BlochVector":
        mx, my, mz = (float(v) for v in values)
        return cls(mx, my, mz)

    def as_array(self) -> np.ndarray:
        return np.array([self.mx, self.my, self.mz], dtype=float)

    def norm(self) -> float:
        return math.sqrt(self.mx ** 2 + self.my ** 2 + self.mz ** 2)

@dataclass(frozen=True)
class Su2Rotation:
    """Elemento de SU(2) como quaternion unitário"""
    w: float
    x: float
    y: float
    z: float

    @classmethod
    def identity(cls) -> "Su2Rotation":
        return cls(1.0, 0.0, 0.0, 0.0)

    @classmethod
    def from_array(cls, q: ArrayLike) -> "Su2Rotation":
        """Cria a partir de 4 componentes, renormalizando"""
        q = np.asarray(q, dtype=float)
        q = q / np.linalg.norm(q)
        return cls(*(float(c) for c in q))

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> "Su2Rotation":
        """
        Cria a partir de uma matriz unitária 2x2 (a fase global é descartada).

        Args:
            matrix: Matriz unitária 2x2 complexa

        Returns:
            Rotação equivalente
        """
        matrix = np.asarray(matrix, dtype=complex)
        matrix = matrix / np.sqrt(np.linalg.det(matrix))
        a, b = matrix[0, 0], matrix[0, 1]
        return cls.from_array([a.real, -b.imag, -b.real, -a.imag])

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z], dtype=float)

    def matrix(self) -> np.ndarray:
        """Matriz 2x2 [[a, b], [-conj(b), conj(a)]]"""
        a = complex(self.w, -self.z)
        b = complex(-self.y, -self.x)
        return np.array([[a, b], [-b.conjugate(), a.conjugate()]], dtype=complex)

    def inverse(self) -> "Su2Rotation":
        return Su2Rotation(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> float:
        return math.sqrt(self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2)

    def axis_angle(self) -> Tuple[np.ndarray, float]:
        """Eixo unitário e ângulo em [0, 2*pi]; eixo z para a identidade"""
        vector = np.array([self.x, self.y, self.z])
        sin_half = float(np.linalg.norm(vector))
        angle = 2.0 * math.atan2(sin_half, self.w)
        if sin_half < GIMBAL_TOLERANCE:
            return np.array([0.0, 0.0, 1.0]), angle
        return vector / sin_half, angle

    def apply_to_spinor(self, state: Spinor) -> Spinor:
        c_up, c_down = self.matrix() @ state.as_array()
        return Spinor(complex(c_up), complex(c_down))

    def __neg__(self) -> "Su2Rotation":
        return Su2Rotation(-self.w, -self.x, -self.y, -self.z)

    def __matmul__(self, other: "Su2Rotation") -> "Su2Rotation":
        return compose(self, other)

@dataclass(frozen=True)
class EulerZxz:
    """Decomposição exp(-i*alpha*Iz) exp(-i*gamma*Ix) exp(-i*beta*Iz)"""
    alpha: float
    gamma: float
    beta: float

    def to_rotation(self) -> Su2Rotation:
        return compose(
            rotation_from_axis_angle((0.0, 0.0, 1.0), self.alpha),
            compose(
                rotation_from_axis_angle((1.0, 0.0, 0.0), self.gamma),
                rotation_from_axis_angle((0.0, 0.0, 1.0), self.beta)
            )
        )

# Operações em lote: arrays com último eixo de tamanho 4 (quaternions)
# ou 3 (vetores de Bloch).

def quaternion_multiply(second: np.ndarray, first: np.ndarray) -> np.ndarray:
    """Produto de Hamilton second*first, equivalente a U_second @ U_first"""
    a1, b1, c1, d1 = np.moveaxis(np.asarray(second, dtype=float), -1, 0)
    a2, b2, c2, d2 = np.moveaxis(np.asarray(first, dtype=float), -1, 0)
    return np.stack([
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ], axis=-1)

def propagator_quaternions(
    omega: ArrayLike,
    amplitude: float,
    phase: float,
    duration: float
) -> np.ndarray:
    """
    Propagadores exatos de um segmento constante para vários offsets.

    Args:
        omega: Offsets normalizados (array)
        amplitude: Amplitude A >= 0
        phase: Fase theta (rad)
        duration: Duração >= 0

    Returns:
        Array (..., 4) de quaternions
    """
    omega = np.asarray(omega, dtype=float)
    total = np.sqrt(omega * omega + amplitude * amplitude)
    half = 0.5 * total * duration
    # sin(Omega*dt/2)/Omega sem divisão por zero
    scale = 0.5 * duration * np.sinc(half / np.pi)
    return np.stack([
        np.cos(half),
        np.broadcast_to(amplitude * math.cos(phase) * scale, omega.shape),
        np.broadcast_to(amplitude * math.sin(phase) * scale, omega.shape),
        omega * scale,
    ], axis=-1)

def rotate_vectors(q: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Aplica q v q* a vetores de Bloch (broadcast nos eixos iniciais)"""
    q = np.asarray(q, dtype=float)
    v = np.asarray(v, dtype=float)
    w = q[..., :1]
    u = q[..., 1:]
    t = 2.0 * np.cross(u, v)
    return v + w * t + np.cross(u, t)

def normalize_quaternions(q: np.ndarray) -> np.ndarray:
    return q / np.linalg.norm(q, axis=-1, keepdims=True)

# Operações sobre valores individuais

def rotation_from_axis_angle(axis: ArrayLike, angle: float) -> Su2Rotation:
    """
    Constrói exp(-i*angle*(n.I)).

    Raises:
        InvalidArgumentError: Se o eixo não for unitário
    """
    validate_unit_vector(axis, "axis")
    nx, ny, nz = (float(c) for c in axis)
    half = 0.5 * angle
    s = math.sin(half)
    return Su2Rotation.from_array([math.cos(half), nx * s, ny * s, nz * s])

def propagator_const(
    omega: float,
    amplitude: float,
    phase: float,
    duration: float
) -> Su2Rotation:
    """
    Propagador exato de omega*Iz + A*cos(theta)*Ix + A*sin(theta)*Iy por `duration`.

    Raises:
        InvalidArgumentError: Se amplitude ou duração forem negativas
    """
    validate_non_negative(amplitude, "amplitude")
    validate_non_negative(duration, "duration")
    q = propagator_quaternions(np.array(float(omega)), amplitude, phase, duration)
    return Su2Rotation.from_array(q)

def compose(second: Su2Rotation, first: Su2Rotation) -> Su2Rotation:
    """Produto temporal: `second` age depois de `first`"""
    return Su2Rotation.from_array(
        quaternion_multiply(second.as_array(), first.as_array())
    )

def apply_to_bloch(r: Su2Rotation, v: BlochVector) -> BlochVector:
    """Ação adjunta de SU(2) sobre a esfera de Bloch"""
    return BlochVector.from_array(rotate_vectors(r.as_array(), v.as_array()))

def _wrap(angle: float) -> float:
    return math.remainder(angle, 2.0 * math.pi)

def euler_zxz(r: Su2Rotation) -> EulerZxz:
    """
    Decomposição z-x-z com gamma em [0, pi].

    Quando sin(gamma) = 0, beta = 0 e todo o ângulo em z vai para alpha.
    """
    cos_half = math.hypot(r.w, r.z)
    sin_half = math.hypot(r.x, r.y)
    gamma = 2.0 * math.atan2(sin_half, cos_half)

    if sin_half < GIMBAL_TOLERANCE:
        return EulerZxz(alpha=_wrap(2.0 * math.atan2(r.z, r.w)), gamma=gamma, beta=0.0)
    if cos_half < GIMBAL_TOLERANCE:
        return EulerZxz(alpha=_wrap(2.0 * math.atan2(r.y, r.x)), gamma=gamma, beta=0.0)

    total = 2.0 * math.atan2(r.z, r.w)       # alpha + beta
    difference = 2.0 * math.atan2(r.y, r.x)  # alpha - beta
    return EulerZxz(
        alpha=_wrap(0.5 * (total + difference)),
        gamma=gamma,
        beta=_wrap(0.5 * (total - difference))
    )

def euler_zxz_batch(q: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Versão vetorizada de euler_zxz, mesma regra de desempate"""
    w, x, y, z = np.moveaxis(np.asarray(q, dtype=float), -1, 0)
    cos_half = np.hypot(w, z)
    sin_half = np.hypot(x, y)
    gamma = 2.0 * np.arctan2(sin_half, cos_half)
    total = 2.0 * np.arctan2(z, w)
    difference = 2.0 * np.arctan2(y, x)

    alpha = 0.5 * (total + difference)
    beta = 0.5 * (total - difference)
    no_x = sin_half < GIMBAL_TOLERANCE
    alpha = np.where(no_x, total, alpha)
    beta = np.where(no_x, 0.0, beta)
    no_z = (cos_half < GIMBAL_TOLERANCE) & ~no_x
    alpha = np.where(no_z, difference, alpha)
    beta = np.where(no_z, 0.0, beta)

    two_pi = 2.0 * np.pi
    return np.remainder(alpha + np.pi, two_pi) - np.pi, gamma, np.remainder(beta + np.pi, two_pi) - np.pi

def rotation_distance(r1: Su2Rotation, r2: Su2Rotation) -> float:
    """Métrica invariante por fase global: 1 - |<q1, q2>| em [0, 1]"""
    overlap = abs(float(np.dot(r1.as_array(), r2.as_array())))
    return min(1.0, max(0.0, 1.0 - overlap))
