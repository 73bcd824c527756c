"""
Unit tests for core/model (几何、约束方程组与逆运动学)

- β 的精确有理化与三角不等式检查
- 约束、奇异与尖点方程组的结构（次数、M1 ≡ J）
- 共点构型上 J 消失、随机构型上与浮点行列式一致
- 逆运动学与镜像三角形示例
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from core.errors import GeometryError
from core.model.geometry import PRESETS, Geometry, beta_from_degrees, beta_from_sides
from core.model.kinematics import JointLengths, Pose, inverse_kinematics, platform_points, pose_from_leg_angles
from core.model.systems import (
    CUSP_UNKNOWNS,
    POSE_VARIABLES,
    build_constraints,
    build_cusp_system,
    build_dk_system,
    build_singular_section_system,
    build_singular_system,
    cusp_minors,
    singular_poly,
)
from core.numeric.rational import rational_from_decimal
from tests.fixtures.constructions import random_pose
from tests.fixtures.oracle import FloatGeometry, pose_jacobian, residuals

# 表中第 1 个尖点构型（三位小数截断）
CUSP_ROW_1 = {
    "r1": 14.98, "r2": 0.845, "r3": 3.777,
    "B1x": 5.336, "B1y": -13.997, "tx": 0.633, "ty": 0.773,
}


def abs_scale(poly, point):
    """各单项绝对值之和，用于相对残差。"""
    values = [abs(point.get(name, 0.0)) for name in poly.variables]
    total = 0.0
    for exps, c in poly.items():
        term = abs(float(c))
        for x, e in zip(values, exps):
            term *= x**e
        total += term
    return total


class TestBetaFromSides:
    """β 的有理化"""

    def test_equilateral(self):
        tol = Fraction(1, 10**12)
        bx, by, _ = beta_from_sides(Fraction(1), Fraction(1), Fraction(1), 1, tol)
        assert bx * bx + by * by == 1
        assert abs(bx - Fraction(1, 2)) <= tol
        assert abs(float(by) - math.sqrt(3) / 2) < 1e-9

    def test_benchmark_cosine(self):
        """余弦与精确的余弦定理值相差不超过容差"""
        dec = rational_from_decimal
        tol = Fraction(1, 10**12)
        bx, by, d2_rec = beta_from_sides(dec("17.04"), dec("16.54"), dec("20.84"), 1, tol)
        assert abs(bx - Fraction(4510956, 7102272)) <= tol
        assert by > 0
        assert abs(d2_rec - dec("16.54") ** 2) <= 2 * dec("17.04") * dec("20.84") * tol

    def test_orientation_flips_sine(self):
        bx_p, by_p, _ = beta_from_sides(Fraction(3), Fraction(4), Fraction(5), 1)
        bx_m, by_m, _ = beta_from_sides(Fraction(3), Fraction(4), Fraction(5), -1)
        assert bx_p == bx_m and by_p == -by_m

    def test_degenerate_triangle_raises(self):
        with pytest.raises(GeometryError):
            beta_from_sides(Fraction(1), Fraction(3), Fraction(1))

    def test_degrees(self):
        bx, by = beta_from_degrees(Fraction(37))
        assert bx * bx + by * by == 1
        assert abs(float(bx) - math.cos(math.radians(37))) < 1e-11
        with pytest.raises(GeometryError):
            beta_from_degrees(Fraction(0))


class TestGeometry:
    """几何参数"""

    def test_benchmark_perturbation_reported(self, benchmark):
        assert benchmark.beta_sign == 1
        assert abs(benchmark.d2_perturbation) < 1e-9
        assert benchmark.describe()["A2x"] == "15.91"

    def test_invalid_geometry_raises(self):
        with pytest.raises(GeometryError):
            Geometry.from_exact(
                A2x=Fraction(0), A3x=Fraction(0), A3y=Fraction(1), d1=Fraction(1), d3=Fraction(1),
                betax=Fraction(0), betay=Fraction(1),
            )
        with pytest.raises(GeometryError):
            Geometry.from_exact(
                A2x=Fraction(1), A3x=Fraction(0), A3y=Fraction(1), d1=Fraction(1), d3=Fraction(1),
                betax=Fraction(1, 2), betay=Fraction(1, 2),
            )

    def test_mirror_and_scale(self, benchmark):
        mirror = benchmark.mirrored()
        assert mirror.A3y == -benchmark.A3y and mirror.betay == -benchmark.betay
        assert mirror.mirrored().betay == benchmark.betay
        scaled = benchmark.scaled(Fraction(3))
        assert scaled.d1 == 3 * benchmark.d1
        assert scaled.betax == benchmark.betax
        with pytest.raises(GeometryError):
            benchmark.scaled(Fraction(0))


class TestSystems:
    """方程组构造"""

    def test_constraint_structure(self, benchmark):
        system = build_constraints(benchmark)
        assert system.unknowns == POSE_VARIABLES
        assert system.parameters == ("r1", "r2", "r3")
        assert system.degrees() == (2, 2, 2, 2)
        tx, ty = (system.equations[3].with_variables(("tx", "ty")).terms.get(k) for k in ((2, 0), (0, 2)))
        assert tx == ty == 1

    def test_e1_at_origin(self, benchmark):
        e1 = build_constraints(benchmark).equations[0]
        assert e1.evaluate({"B1x": 0, "B1y": 0, "r1": 0}) == 0

    def test_singular_degrees(self, benchmark):
        system = build_singular_system(benchmark)
        assert len(system) == 5
        assert system.degrees() == (2, 2, 2, 2, 3)
        assert set(singular_poly(benchmark).support()) <= set(POSE_VARIABLES)

    @pytest.mark.parametrize("name", ["benchmark", "fig4+", "fig4-"])
    def test_cusp_degree_multiset(self, name):
        system = build_cusp_system(PRESETS[name]())
        assert len(system) == 9
        assert sorted(system.degrees()) == [2, 2, 2, 2, 3, 5, 5, 5, 5]
        assert system.unknowns == CUSP_UNKNOWNS
        assert system.parameters == ("r1",)

    def test_first_minor_is_jacobian_determinant(self, benchmark):
        """M1 ≡ J"""
        assert cusp_minors(benchmark)[0] == singular_poly(benchmark)

    def test_constraints_match_float_oracle(self, benchmark, rng):
        fg = FloatGeometry.of(benchmark)
        polys = build_constraints(benchmark).equations
        for _ in range(100):
            X = random_pose(rng)
            L = [rng.uniform(0, 30) for _ in range(3)]
            point = dict(zip(POSE_VARIABLES, X)) | dict(zip(("r1", "r2", "r3"), L))
            expected = residuals(fg, L, X)
            for p, e in zip(polys, expected):
                assert abs(p.evaluate_float(point) - e) <= 1e-9 * (1 + abs_scale(p, point))

    def test_jacobian_determinant_matches_float_oracle(self, benchmark, rng):
        """J 与数值 4×4 雅可比行列式一致，随机构型上不为零"""
        fg = FloatGeometry.of(benchmark)
        J = singular_poly(benchmark)
        for _ in range(100):
            X = random_pose(rng)
            point = dict(zip(POSE_VARIABLES, X))
            value = J.evaluate_float(point)
            expected = float(np.linalg.det(pose_jacobian(fg, X)))
            assert abs(value - expected) <= 1e-7 * abs_scale(J, point)
            assert value != 0.0

    def test_minors_match_finite_differences(self, benchmark, rng):
        """M2..M5 与用中心差分构造的 5×4 矩阵子式一致"""
        fg = FloatGeometry.of(benchmark)
        J = singular_poly(benchmark)
        minors = cusp_minors(benchmark)
        h = 1e-6
        for _ in range(20):
            X = random_pose(rng, radius=10.0)
            point = dict(zip(POSE_VARIABLES, X))
            grad = []
            for k, name in enumerate(POSE_VARIABLES):
                plus, minus = dict(point), dict(point)
                plus[name] += h
                minus[name] -= h
                grad.append((J.evaluate_float(plus) - J.evaluate_float(minus)) / (2 * h))
            full = np.vstack([pose_jacobian(fg, X), np.array(grad)])
            for index, rows in enumerate(((0, 1, 2, 4), (0, 1, 3, 4), (0, 2, 3, 4), (1, 2, 3, 4)), start=1):
                expected = float(np.linalg.det(full[list(rows)]))
                value = minors[index].evaluate_float(point)
                assert abs(value - expected) <= 1e-5 * max(1.0, abs_scale(minors[index], point))

    def test_jacobian_vanishes_when_legs_concurrent(self, benchmark, concurrent_configuration, rng):
        J = singular_poly(benchmark)
        point = dict(zip(POSE_VARIABLES, concurrent_configuration))
        typical = np.median([abs(J.evaluate_float(dict(zip(POSE_VARIABLES, random_pose(rng))))) for _ in range(50)])
        assert abs(J.evaluate_float(point)) <= 1e-6 * typical

    def test_table_row_on_cusp_variety(self, benchmark):
        """截断的尖点构型使 9 个方程的相对残差都很小"""
        system = build_cusp_system(benchmark)
        for label, p in zip(system.labels, system.equations):
            value = p.evaluate_float(CUSP_ROW_1)
            assert abs(value) <= 2e-2 * abs_scale(p, CUSP_ROW_1), label

    def test_dk_and_section_systems_are_square(self, benchmark):
        dk = build_dk_system(benchmark, Fraction(1498, 100), Fraction(20), Fraction(15))
        assert dk.is_square and dk.parameters == ()
        section = build_singular_section_system(benchmark, Fraction(1498, 100), Fraction(10))
        assert section.is_square
        assert section.unknowns == POSE_VARIABLES + ("r3",)


class TestKinematics:
    """位姿与逆运动学"""

    def test_pose_at_origin_gives_zero_r1(self, benchmark):
        joints = inverse_kinematics(benchmark, Pose(0.0, 0.0, 1.0, 0.0))
        assert joints.r1 == 0.0
        assert joints.r2 == pytest.approx(abs(float(benchmark.d1 - benchmark.A2x)))

    def test_mirror_triangle_example(self, fig4_pair):
        positive, negative = fig4_pair
        pose = pose_from_leg_angles(positive, 5, 53, 5, 127)
        assert inverse_kinematics(positive, pose).r3 == pytest.approx(3.0, abs=0.05)
        assert inverse_kinematics(negative, pose).r3 == pytest.approx(9.0, abs=0.05)

    def test_ik_satisfies_constraints(self, benchmark, rng):
        fg = FloatGeometry.of(benchmark)
        for _ in range(50):
            X = random_pose(rng)
            joints = inverse_kinematics(benchmark, Pose(*X))
            assert np.max(np.abs(residuals(fg, joints.as_tuple(), X))) < 1e-9

    def test_off_circle_orientation_raises(self, benchmark):
        with pytest.raises(GeometryError):
            inverse_kinematics(benchmark, Pose(0.0, 0.0, 1.0, 0.1))

    def test_negative_length_raises(self):
        with pytest.raises(GeometryError):
            JointLengths(1.0, -1.0, 2.0)

    def test_platform_edges(self, benchmark):
        b1, b2, b3 = platform_points(benchmark, Pose.from_angle(1.0, 2.0, 30.0))
        assert math.dist(b1, b2) == pytest.approx(float(benchmark.d1))
        assert math.dist(b1, b3) == pytest.approx(float(benchmark.d3))
        assert math.dist(b2, b3) == pytest.approx(benchmark.d2_effective)

    def test_exact_joint_values(self):
        joints = JointLengths(Fraction(1498, 100), 0.5, 1)
        assert joints.exact() == {"r1": Fraction(1498, 100), "r2": Fraction(1, 2), "r3": Fraction(1)}
