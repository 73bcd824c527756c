"""
Pytest configuration and shared fixtures for all tests.

提供基准几何、独立 oracle 与快速求解选项。
"""

import random

import pytest

from core.model.geometry import benchmark_geometry, fig4_geometry
from core.solver.report import SolverOptions
from tests.fixtures.constructions import concurrent_pose
from tests.fixtures.oracle import dk_poses


@pytest.fixture(scope="session")
def benchmark():
    """常用基准机构（β 取正向）。"""
    return benchmark_geometry(1)


@pytest.fixture(scope="session")
def fig4_pair():
    """镜像三角形示例 (β = +37°, β = −37°)。"""
    return fig4_geometry(1), fig4_geometry(-1)


@pytest.fixture
def rng():
    """固定种子的随机数发生器。"""
    return random.Random(20240601)


@pytest.fixture
def fast_options():
    """小规模方程组用的求解选项。"""
    return SolverOptions(split_depth=1, max_boxes=20_000)


@pytest.fixture(scope="session")
def dk_oracle():
    """
    正运动学 oracle：dk_oracle(geometry, (r1, r2, r3)) → 位姿数组列表。

    Example:
        >>> poses = dk_oracle(benchmark, (14.98, 20, 15))
    """
    return dk_poses


@pytest.fixture(scope="session")
def concurrent_configuration(benchmark):
    """基准机构上三腿共点的位姿。"""
    pose = concurrent_pose(benchmark)
    assert pose is not None
    return pose
