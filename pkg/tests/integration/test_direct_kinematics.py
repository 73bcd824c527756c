"""
Integration tests: certified direct kinematics against an independent Newton oracle.
"""

from fractions import Fraction

import numpy as np
import pytest

from core.atlas.kinematics import assembly_modes, direct_kinematics, search_box_for
from core.model.geometry import Geometry
from core.model.kinematics import JointLengths, Pose, inverse_kinematics
from core.solver.report import SolverOptions
from tests.fixtures.constructions import random_pose
from tests.fixtures.oracle import dk_poses


def certified_points(report):
    return [np.array(r.midpoint) for r in report.roots]


def assert_disjoint(report):
    for i, a in enumerate(report.roots):
        for b in report.roots[i + 1:]:
            assert a.box.is_disjoint(b.box)


def regular_joints(g, rng, count):
    """由随机位姿经逆运动学得到的杆长（保证至少一个实解）。"""
    joints = []
    for _ in range(count):
        X = random_pose(rng)
        joints.append((inverse_kinematics(g, Pose(*map(float, X))), X))
    return joints


class TestAgainstOracle:
    """与多起点 Newton oracle 比较"""

    def test_benchmark_joint_vector(self, benchmark, dk_oracle):
        """(14.98, 20, 15) 的装配模式与 oracle 一致"""
        L = JointLengths(Fraction(1498, 100), Fraction(20), Fraction(15))
        report = direct_kinematics(benchmark, L)
        assert report.complete
        oracle = dk_oracle(benchmark, (14.98, 20.0, 15.0))
        assert len(report) == len(oracle) <= 6
        for pose in oracle:
            assert any(np.max(np.abs(pose - p)) <= 1e-6 for p in certified_points(report))
        assert_disjoint(report)

    def test_modes_carry_jacobian_sign(self, benchmark):
        """每个装配模式都不在奇异曲面上"""
        L = JointLengths(Fraction(1498, 100), Fraction(20), Fraction(15))
        modes = assembly_modes(benchmark, direct_kinematics(benchmark, L))
        assert modes
        assert all(m.det_j != 0.0 for m in modes)

    @pytest.mark.slow
    def test_random_joint_vectors(self, benchmark, rng):
        """50 个正则杆长：包含生成位姿、IK∘DK 为恒等、oracle 找不到认证盒之外的解"""
        complete = 0
        for L, X in regular_joints(benchmark, rng, 50):
            report = direct_kinematics(benchmark, L)
            if not report.complete:
                continue
            complete += 1
            assert 1 <= len(report) <= 6
            assert any(np.max(np.abs(X - p)) <= 1e-6 for p in certified_points(report))
            for mode in assembly_modes(benchmark, report):
                back = inverse_kinematics(benchmark, mode.pose)
                assert back.as_tuple() == pytest.approx(tuple(float(r) for r in L.as_tuple()), abs=1e-8)
            oracle = dk_poses(benchmark, L.as_tuple(), starts=24)
            for pose in oracle:
                assert any(r.box.contains_point(pose) or np.max(np.abs(pose - np.array(r.midpoint))) <= 1e-6
                           for r in report.roots)
        assert complete >= 45

    @pytest.mark.slow
    def test_uniform_joint_vectors(self, benchmark, rng):
        """搜索盒内均匀抽取 100 个杆长：认证解数为偶数且不超过 6"""
        complete = 0
        for _ in range(100):
            r1 = rng.uniform(0.5, 35.0)
            box = search_box_for(benchmark, Fraction(r1))
            L = JointLengths(r1, rng.uniform(0.0, box["r2"].hi), rng.uniform(0.0, box["r3"].hi))
            report = direct_kinematics(benchmark, L)
            assert_disjoint(report)
            if not report.complete:
                continue
            complete += 1
            assert len(report) <= 6
            assert len(report) % 2 == 0
        assert complete >= 95

    @pytest.mark.slow
    def test_six_assembly_modes_exist(self, benchmark, rng):
        """存在 6 个实装配模式的杆长，且全部被认证"""
        for L, _ in regular_joints(benchmark, rng, 300):
            if len(dk_poses(benchmark, L.as_tuple(), starts=16)) == 6:
                report = direct_kinematics(benchmark, L)
                assert report.complete and len(report) == 6
                return
        pytest.fail("随机搜索未找到 6 个实装配模式的杆长")


class TestSymmetries:
    """镜像与缩放"""

    def test_mirror_negates_y(self, benchmark):
        """镜像几何的解为原解的 (B1y, ty) 取反"""
        L = JointLengths(Fraction(1498, 100), Fraction(20), Fraction(15))
        original = direct_kinematics(benchmark, L)
        mirrored = direct_kinematics(benchmark.mirrored(), L)
        assert original.complete and mirrored.complete
        assert len(original) == len(mirrored)
        flip = np.array([1.0, -1.0, 1.0, -1.0])
        for p in certified_points(original):
            assert any(np.max(np.abs(p * flip - q)) <= 1e-9 for q in certified_points(mirrored))

    @pytest.mark.parametrize("factor", [Fraction(1, 2), Fraction(3)])
    def test_scaling(self, benchmark, factor):
        """几何与杆长同比缩放时 B1 同比缩放、方向不变"""
        L = JointLengths(Fraction(1498, 100), Fraction(20), Fraction(15))
        original = direct_kinematics(benchmark, L)
        scaled = direct_kinematics(benchmark.scaled(factor), L.scaled(factor))
        assert len(original) == len(scaled)
        s = float(factor)
        factors = np.array([s, s, 1.0, 1.0])
        for p in certified_points(original):
            assert any(np.max(np.abs(p * factors - q)) <= 1e-8 * max(1.0, s) for q in certified_points(scaled))


class TestThreads:
    """确定性"""

    def test_same_report_for_any_thread_count(self, benchmark):
        """串行与并行认证结果完全一致"""
        L = JointLengths(Fraction(1498, 100), Fraction(20), Fraction(15))
        serial = direct_kinematics(benchmark, L, SolverOptions(threads=1))
        parallel = direct_kinematics(benchmark, L, SolverOptions(threads=4))
        assert serial == parallel


class TestZeroFirstLeg:
    """r1 = 0：B1 与 A1 重合"""

    def test_exact_geometry(self):
        """B1 在原点、方向 (3/5, 4/5) 的唯一装配模式"""
        g = Geometry.from_exact(
            A2x=Fraction(6), A3x=Fraction(-4), A3y=Fraction(8), d1=Fraction(5), d3=Fraction(5),
            betax=Fraction(0), betay=Fraction(1),
        )
        report = direct_kinematics(g, JointLengths(Fraction(0), Fraction(5), Fraction(5)))
        assert report.complete
        assert report.unknowns == ("B1x", "B1y", "tx", "ty")
        assert len(report) == 1
        root = report.roots[0]
        assert root.box["B1x"].lo == root.box["B1x"].hi == 0.0
        assert root.box["B1y"].lo == root.box["B1y"].hi == 0.0
        assert root.midpoint == pytest.approx((0.0, 0.0, 0.6, 0.8), abs=1e-12)
        assert 0 not in root.selected

    def test_benchmark(self, benchmark):
        """基准机构上 r1 = 0 的解全部 B1 = (0, 0)，且满足逆运动学"""
        pose = Pose(0.0, 0.0, 0.6, 0.8)
        L = inverse_kinematics(benchmark, pose)
        assert L.r1 == 0.0
        report = direct_kinematics(benchmark, JointLengths(0, Fraction(L.r2), Fraction(L.r3)))
        for root in report.roots:
            assert root.value("B1x") == 0.0 and root.value("B1y") == 0.0
        for box in report.unresolved:
            assert box["B1x"].lo == box["B1x"].hi == 0.0
