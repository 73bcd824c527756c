"""求解统计的数据模型。"""

from pydantic import BaseModel, Field


class SolveStats(BaseModel):
    """单次求解的统计（不含耗时，保证结果可逐字节复现）"""

    # 处理过的盒子总数
    boxes_processed: int = Field(default=0, description="处理的盒子数")
    # 被区间求值排除的盒子数
    boxes_pruned: int = Field(default=0, description="剪枝排除的盒子数")
    bisections: int = Field(default=0, description="二分次数")
    krawczyk_calls: int = Field(default=0, description="Krawczyk 检验次数")
    certified: int = Field(default=0, description="认证根数")
    # 超定模式下未选方程残差区间不含 0 而被拒绝的根
    rejected: int = Field(default=0, description="被未选方程否决的根数")
    unresolved: int = Field(default=0, description="未解决盒子数")
    max_depth_reached: int = Field(default=0, description="达到的最大二分深度")
    budget_exhausted: bool = Field(default=False, description="是否耗尽盒子预算")

    def merged(self, other: "SolveStats") -> "SolveStats":
        return SolveStats(
            boxes_processed=self.boxes_processed + other.boxes_processed,
            boxes_pruned=self.boxes_pruned + other.boxes_pruned,
            bisections=self.bisections + other.bisections,
            krawczyk_calls=self.krawczyk_calls + other.krawczyk_calls,
            certified=self.certified + other.certified,
            rejected=self.rejected + other.rejected,
            unresolved=self.unresolved + other.unresolved,
            max_depth_reached=max(self.max_depth_reached, other.max_depth_reached),
            budget_exhausted=self.budget_exhausted or other.budget_exhausted,
        )
