"""
Testes da álgebra de rotações SU(2).
"""

import math
import sys
import unittest
from pathlib import Path

import numpy as np
from numpy.testing import assert_allclose
from scipy.linalg import expm

# Adicionar diretório raiz ao PYTHONPATH
sys.path.append(str(Path(__file__).parent.parent))

from src.core.errors import InvalidArgumentError
from src.spin.su2 import (
    BlochVector,
    EulerZxz,
    Spinor,
    Su2Rotation,
    apply_to_bloch,
    compose,
    euler_zxz,
    euler_zxz_batch,
    propagator_const,
    propagator_quaternions,
    rotation_distance,
    rotation_from_axis_angle,
)

IX = 0.5 * np.array([[0, 1], [1, 0]], dtype=complex)
IY = 0.5 * np.array([[0, -1j], [1j, 0]], dtype=complex)
IZ = 0.5 * np.array([[1, 0], [0, -1]], dtype=complex)

def random_rotation(rng):
    return Su2Rotation.from_array(rng.normal(size=4))

class TestAxisAngle(unittest.TestCase):
    def test_zero_angle_is_identity(self):
        """Ângulo zero em qualquer eixo é a identidade"""
        for axis in [(1, 0, 0), (0, 1, 0), (0.6, 0.0, 0.8)]:
            r = rotation_from_axis_angle(axis, 0.0)
            self.assertEqual(rotation_distance(r, Su2Rotation.identity()), 0.0)

    def test_pi_about_x_inverts_z(self):
        """Rotação de pi em x leva z a -z"""
        v = apply_to_bloch(rotation_from_axis_angle((1, 0, 0), math.pi), BlochVector.along("z"))
        assert_allclose(v.as_array(), [0, 0, -1], atol=1e-12)

    def test_quarter_turn_about_z_matches_matrix_exponential(self):
        """Rz(pi/2) aplicado a x concorda com expm do gerador 2x2"""
        r = rotation_from_axis_angle((0, 0, 1), math.pi / 2)
        v = apply_to_bloch(r, BlochVector.along("x"))

        state = expm(-1j * (math.pi / 2) * IZ) @ (np.array([1, 1], dtype=complex) / math.sqrt(2))
        oracle = Spinor(complex(state[0]), complex(state[1])).to_bloch()

        assert_allclose(v.as_array(), oracle.as_array(), atol=1e-12)
        self.assertAlmostEqual(abs(v.my), 1.0, places=12)

    def test_non_unit_axis_rejected(self):
        """Eixo não unitário gera erro de argumento"""
        with self.assertRaises(InvalidArgumentError):
            rotation_from_axis_angle((1, 1, 0), 1.0)
        with self.assertRaises(InvalidArgumentError):
            rotation_from_axis_angle((1, 0), 1.0)

class TestPropagator(unittest.TestCase):
    def test_no_field_no_offset_is_identity(self):
        r = propagator_const(0.0, 0.0, 0.0, 5.0)
        self.assertEqual(r, Su2Rotation.identity())

    def test_on_resonance_pi_pulse(self):
        """Pulso pi em ressonância leva z a -z"""
        v = apply_to_bloch(propagator_const(0.0, math.pi, 0.0, 1.0), BlochVector.along("z"))
        self.assertAlmostEqual(v.mz, -1.0, places=12)

    def test_on_resonance_half_pi_pulse_goes_to_minus_y(self):
        """Pulso pi/2 com fase x leva z a -y"""
        v = apply_to_bloch(propagator_const(0.0, math.pi / 2, 0.0, 1.0), BlochVector.along("z"))
        assert_allclose(v.as_array(), [0, -1, 0], atol=1e-12)

    def test_negative_arguments_rejected(self):
        with self.assertRaises(InvalidArgumentError):
            propagator_const(0.1, -0.5, 0.0, 1.0)
        with self.assertRaises(InvalidArgumentError):
            propagator_const(0.1, 0.5, 0.0, -1.0)

    def test_matches_matrix_exponential(self):
        """Propagador fechado concorda com scipy.linalg.expm"""
        rng = np.random.default_rng(7)
        for _ in range(50):
            omega, amplitude = rng.uniform(-2, 2), rng.uniform(0, 2)
            phase, duration = rng.uniform(0, 2 * np.pi), rng.uniform(0, 20)
            h = omega * IZ + amplitude * (math.cos(phase) * IX + math.sin(phase) * IY)
            oracle = expm(-1j * duration * h)
            r = propagator_const(omega, amplitude, phase, duration)
            assert_allclose(r.matrix(), oracle, atol=1e-10)

    def test_refinement_into_substeps(self):
        """Composição de n sub-passos iguais reproduz o passo inteiro"""
        rng = np.random.default_rng(11)
        for _ in range(10):
            omega, amplitude, phase = rng.uniform(-2, 2), rng.uniform(0, 2), rng.uniform(0, 2 * np.pi)
            duration = rng.uniform(0.1, 10)
            whole = propagator_const(omega, amplitude, phase, duration)
            for n in (2, 5, 40):
                step = propagator_const(omega, amplitude, phase, duration / n)
                total = Su2Rotation.identity()
                for _ in range(n):
                    total = compose(step, total)
                assert_allclose(total.as_array(), whole.as_array(), atol=1e-9)

    def test_batch_matches_single(self):
        offsets = np.linspace(-1, 1, 9)
        batch = propagator_quaternions(offsets, 0.3, 1.2, 2.5)
        for omega, q in zip(offsets, batch):
            assert_allclose(q, propagator_const(omega, 0.3, 1.2, 2.5).as_array(), atol=1e-15)

class TestComposition(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(3)

    def test_compose_is_matrix_product(self):
        """compose(second, first) corresponde a U_second @ U_first"""
        for _ in range(20):
            first, second = random_rotation(self.rng), random_rotation(self.rng)
            assert_allclose(
                compose(second, first).matrix(), second.matrix() @ first.matrix(), atol=1e-12
            )
            self.assertEqual(second @ first, compose(second, first))

    def test_unitarity_preserved(self):
        r = Su2Rotation.identity()
        for _ in range(500):
            r = compose(random_rotation(self.rng), r)
            self.assertAlmostEqual(r.norm(), 1.0, delta=1e-12)
        self.assertAlmostEqual(abs(np.linalg.det(r.matrix())), 1.0, delta=1e-12)

    def test_from_matrix_round_trip(self):
        r = random_rotation(self.rng)
        back = Su2Rotation.from_matrix(np.exp(0.7j) * r.matrix())
        self.assertLess(rotation_distance(r, back), 1e-12)

    def test_inverse(self):
        r = random_rotation(self.rng)
        self.assertLess(rotation_distance(compose(r.inverse(), r), Su2Rotation.identity()), 1e-12)

class TestBloch(unittest.TestCase):
    def test_along_labels(self):
        assert_allclose(BlochVector.along("-y").as_array(), [0, -1, 0])
        assert_allclose(BlochVector.along("z").as_array(), [0, 0, 1])

    def test_spinor_up_is_z(self):
        assert_allclose(Spinor.up().to_bloch().as_array(), [0, 0, 1])

    def test_consistency_with_spinor_route(self):
        """apply_to_bloch concorda com o caminho spinor -> matriz -> Bloch"""
        rng = np.random.default_rng(5)
        for _ in range(100):
            r = random_rotation(rng)
            c = rng.normal(size=2) + 1j * rng.normal(size=2)
            state = Spinor(complex(c[0]), complex(c[1])).normalized()
            direct = apply_to_bloch(r, state.to_bloch())
            rotated = r.apply_to_spinor(state)
            self.assertAlmostEqual(abs(rotated.c_up) ** 2 + abs(rotated.c_down) ** 2, 1.0, delta=1e-12)
            assert_allclose(direct.as_array(), rotated.to_bloch().as_array(), atol=1e-10)
            self.assertAlmostEqual(direct.norm(), 1.0, delta=1e-9)

class TestEuler(unittest.TestCase):
    def test_identity(self):
        angles = euler_zxz(Su2Rotation.identity())
        self.assertEqual((angles.alpha, angles.gamma, angles.beta), (0.0, 0.0, 0.0))

    def test_pi_about_x_tie_break(self):
        """exp(-i*pi*Ix): gamma = pi e alpha = beta = 0"""
        angles = euler_zxz(rotation_from_axis_angle((1, 0, 0), math.pi))
        self.assertAlmostEqual(angles.gamma, math.pi, places=12)
        self.assertEqual(angles.alpha, 0.0)
        self.assertEqual(angles.beta, 0.0)

    def test_pure_z_rotation_puts_angle_in_alpha(self):
        angles = euler_zxz(rotation_from_axis_angle((0, 0, 1), 0.8))
        self.assertAlmostEqual(angles.alpha, 0.8, places=12)
        self.assertEqual(angles.beta, 0.0)

    def test_known_angles(self):
        source = EulerZxz(alpha=0.3, gamma=1.1, beta=-0.7)
        angles = euler_zxz(source.to_rotation())
        self.assertAlmostEqual(angles.alpha, 0.3, places=10)
        self.assertAlmostEqual(angles.gamma, 1.1, places=10)
        self.assertAlmostEqual(angles.beta, -0.7, places=10)

    def test_round_trip_random(self):
        """1000 rotações aleatórias recompõem com distância < 1e-10"""
        rng = np.random.default_rng(20240517)
        for _ in range(1000):
            r = random_rotation(rng)
            angles = euler_zxz(r)
            self.assertGreaterEqual(angles.gamma, 0.0)
            self.assertLessEqual(angles.gamma, math.pi)
            self.assertLess(rotation_distance(angles.to_rotation(), r), 1e-10)

    def test_batch_matches_scalar(self):
        rng = np.random.default_rng(9)
        q = np.array([random_rotation(rng).as_array() for _ in range(50)])
        alpha, gamma, beta = euler_zxz_batch(q)
        for i, row in enumerate(q):
            recomposed = EulerZxz(alpha=alpha[i], gamma=gamma[i], beta=beta[i]).to_rotation()
            self.assertLess(rotation_distance(recomposed, Su2Rotation.from_array(row)), 1e-10)

class TestRotationDistance(unittest.TestCase):
    def test_same_and_negated(self):
        r = random_rotation(np.random.default_rng(1))
        self.assertAlmostEqual(rotation_distance(r, r), 0.0, places=15)
        self.assertAlmostEqual(rotation_distance(r, -r), 0.0, places=15)

    def test_identity_vs_inversion(self):
        d = rotation_distance(Su2Rotation.identity(), rotation_from_axis_angle((1, 0, 0), math.pi))
        self.assertAlmostEqual(d, 1.0, places=12)

if __name__ == "__main__":
    unittest.main()
