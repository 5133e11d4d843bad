"""
Report Models
Pydantic models for verification check records and suite reports
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, computed_field


class CheckRecord(BaseModel):
    name: str
    expected: Optional[str] = None
    actual: Optional[str] = None
    tolerance: Optional[float] = None
    passed: bool
    error: Optional[str] = None

    def to_text(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        line = f"[{mark}] {self.name}"
        if self.expected is not None or self.actual is not None:
            line += f": expected {self.expected}, got {self.actual}"
        if self.tolerance is not None:
            line += f" (tol {self.tolerance:g})"
        if self.error:
            line += f" -- {self.error}"
        return line


class Report(BaseModel):
    suite: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckRecord] = Field(default_factory=list)
    duration_seconds: float = 0.0

    @computed_field
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failing(self) -> List[CheckRecord]:
        return [check for check in self.checks if not check.passed]

    def to_text(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        lines = [f"== {self.suite} ({params})"]
        lines.extend(check.to_text() for check in self.checks)
        status = "PASS" if self.passed else "FAIL"
        lines.append(f"-- {self.suite}: {status} ({len(self.checks)} checks, {self.duration_seconds:.2f}s)")
        return "\n".join(lines)


class RunSummary(BaseModel):
    reports: List[Report] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    def failing(self) -> List[CheckRecord]:
        return [check for report in self.reports for check in report.failing()]
