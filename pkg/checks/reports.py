from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field


class CheckRecord(BaseModel):
    """One verified identity: which object it concerns, and whether it held."""

    model_config = ConfigDict(populate_by_name=True)

    subject: str
    passed: bool = Field(alias="pass")
    detail: str = ""
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    data: Dict[str, Any] = Field(default_factory=dict)


class CheckReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    check: str
    n: int
    records: List[CheckRecord] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    @computed_field
    @property
    def pass_count(self) -> int:
        return sum(1 for r in self.records if r.passed)

    @computed_field
    @property
    def total(self) -> int:
        return len(self.records)

    @computed_field(alias="pass")
    @property
    def passed(self) -> bool:
        return self.pass_count == self.total

    def failures(self) -> List[CheckRecord]:
        return [r for r in self.records if not r.passed]


class VerifyReport(CheckReport):
    """Theorem sweep; each record carries w, its descents and its partition in ``data``."""

    def record_for(self, w: List[int]) -> Optional[CheckRecord]:
        for record in self.records:
            if record.data.get("w") == list(w):
                return record
        return None


class SuiteReport(BaseModel):
    n: int
    reports: List[CheckReport] = Field(default_factory=list)

    @computed_field(alias="pass")
    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)
