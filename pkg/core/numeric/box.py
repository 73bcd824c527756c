"""区间向量（盒子）：每个未知量一个分量。"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Sequence, Union

from core.numeric.interval import Interval, Number


@dataclass(frozen=True, slots=True)
class Box:
    """按名称索引的区间向量，宽度取各分量宽度的最大值。"""

    names: tuple[str, ...]
    intervals: tuple[Interval, ...]

    def __post_init__(self) -> None:
        if len(self.names) != len(self.intervals):
            raise ValueError("变量名数量与区间数量不一致")

    @classmethod
    def from_bounds(cls, bounds: Mapping[str, tuple[Number, Number]]) -> "Box":
        names = tuple(bounds)
        return cls(names, tuple(Interval.from_bounds(lo, hi) for lo, hi in bounds.values()))

    @classmethod
    def point(cls, names: Sequence[str], values: Sequence[Number]) -> "Box":
        return cls(tuple(names), tuple(Interval.point(v) for v in values))

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def __getitem__(self, key: Union[int, str]) -> Interval:
        if isinstance(key, str):
            return self.intervals[self.names.index(key)]
        return self.intervals[key]

    def as_dict(self) -> dict[str, Interval]:
        return dict(zip(self.names, self.intervals))

    @property
    def width(self) -> float:
        return max((iv.width for iv in self.intervals), default=0.0)

    def widths(self) -> tuple[float, ...]:
        return tuple(iv.width for iv in self.intervals)

    def mid(self) -> tuple[float, ...]:
        return tuple(iv.mid for iv in self.intervals)

    def normalized_widths(self, reference: Sequence[float]) -> tuple[float, ...]:
        """相对初始盒宽度的归一化宽度；初始宽度为 0 的分量记为 0。"""
        return tuple(
            (iv.width / ref) if ref > 0 else 0.0 for iv, ref in zip(self.intervals, reference)
        )

    def replace(self, index: int, interval: Interval) -> "Box":
        items = list(self.intervals)
        items[index] = interval
        return Box(self.names, tuple(items))

    def bisect(self, index: int) -> tuple["Box", "Box"]:
        left, right = self.intervals[index].bisect()
        return self.replace(index, left), self.replace(index, right)

    def intersect(self, other: "Box") -> Optional["Box"]:
        parts = []
        for a, b in zip(self.intervals, other.intervals):
            c = a.intersect(b)
            if c is None:
                return None
            parts.append(c)
        return Box(self.names, tuple(parts))

    def hull(self, other: "Box") -> "Box":
        return Box(self.names, tuple(a.hull(b) for a, b in zip(self.intervals, other.intervals)))

    def is_subset(self, other: "Box") -> bool:
        return all(a.is_subset(b) for a, b in zip(self.intervals, other.intervals))

    def is_interior_of(self, other: "Box") -> bool:
        return all(a.is_interior_of(b) for a, b in zip(self.intervals, other.intervals))

    def is_disjoint(self, other: "Box") -> bool:
        return self.intersect(other) is None

    def contains_point(self, values: Sequence[Number]) -> bool:
        return all(iv.contains(v) for iv, v in zip(self.intervals, values))

    def sort_key(self) -> tuple[float, ...]:
        """规范排序键：按各分量下界字典序。"""
        return tuple(iv.lo for iv in self.intervals) + tuple(iv.hi for iv in self.intervals)


IntervalVector = Box
