from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from cores.coloring_core import NordhausGaddumResult
from cores.exact_core import MatchingInfo
from families.recognizers import ClassificationRecord
from utils.config import Tolerances

CheckStatus = Literal["passed", "failed", "skipped", "error"]

THEOREM_IDS = [f"T{k}" for k in range(1, 17)]


class TheoremCheck(BaseModel):
    """Результат одной проверки утверждения на одном графе"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["check"] = "check"
    theorem_id: str
    graph: str
    hypothesis_holds: bool
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    passed: Optional[bool] = None
    status: CheckStatus
    detail: str = ""


class AnalysisReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["analysis"] = "analysis"
    graph6: str
    n: int
    m: int
    spectrum: List[float]
    energy: float
    energy_complement: float
    rank: int
    a_r_abs: Optional[int] = None
    chi: int
    chi_complement: int
    positive_count: int
    matching: Optional[MatchingInfo] = None
    nordhaus_gaddum: NordhausGaddumResult
    classification: ClassificationRecord
    theorem_flags: Dict[str, Optional[bool]]


class ReportHeader(BaseModel):
    """Первая запись каждого потока отчета: допуски и состав прогона"""

    kind: Literal["header"] = "header"
    tool: str = "graph-energy"
    tolerances: Tolerances
    theorems: List[str] = []
    source: str = ""


class TheoremCounts(BaseModel):
    checked: int = 0
    hypothesis_skipped: int = 0
    passed: int = 0
    failed: int = 0
    errored: int = 0


class SuiteSummary(BaseModel):
    kind: Literal["summary"] = "summary"
    graphs: int = 0
    checked: int = 0
    hypothesis_skipped: int = 0
    passed: int = 0
    failed: int = 0
    errored: int = 0
    per_theorem: Dict[str, TheoremCounts] = Field(default_factory=dict)
    counterexamples: List[Dict[str, str]] = Field(default_factory=list)
    t12_empirical_exceptions: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.errored == 0

    def record(self, check: TheoremCheck):
        counts = self.per_theorem.setdefault(check.theorem_id, TheoremCounts())
        self.checked += 1
        counts.checked += 1
        if check.status == "skipped":
            self.hypothesis_skipped += 1
            counts.hypothesis_skipped += 1
        elif check.status == "passed":
            self.passed += 1
            counts.passed += 1
        elif check.status == "failed":
            self.failed += 1
            counts.failed += 1
            self.counterexamples.append({"theorem_id": check.theorem_id, "graph6": check.graph})
        else:
            self.errored += 1
            counts.errored += 1
