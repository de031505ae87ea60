from __future__ import annotations

from typing import TYPE_CHECKING, Literal, Optional, Union

from pydantic import BaseModel

from pdsets.search import SearchReport
from pdsets.verdict import Verdict

from .output import Level

if TYPE_CHECKING:
    from pdsets.utils import ReportSummary


class Start(BaseModel):
    type: Literal["START"] = "START"
    command: str
    source: Optional[str]


class VerdictEvent(BaseModel):
    type: Literal["VERDICT"] = "VERDICT"
    verdict: Verdict


class ReportEvent(BaseModel):
    type: Literal["REPORT"] = "REPORT"
    report: SearchReport


class Msg(BaseModel):
    type: Literal["MSG"] = "MSG"
    level: Level = "info"
    msg: str


class End(BaseModel):
    type: Literal["END"] = "END"
    holds: int
    violated: int
    inconclusive: int
    errors: int
    exit_code: int


EventType = Union[Start, VerdictEvent, ReportEvent, Msg, End]


class JSONL:
    def start(self, command: str, source: Optional[str] = None) -> None:
        self.emit_event(Start(command=command, source=source))

    def verdict(self, v: Verdict) -> None:
        self.emit_event(VerdictEvent(verdict=v))

    def report(self, r: SearchReport) -> None:
        self.emit_event(ReportEvent(report=r))

    def msg(self, msg: str, level: Level = "info") -> None:
        self.emit_event(Msg(level=level, msg=msg))

    def end(self, summary: ReportSummary) -> None:
        self.emit_event(
            End(
                holds=summary.holds,
                violated=summary.violated,
                inconclusive=summary.inconclusive,
                errors=summary.errors,
                exit_code=summary.exit_code(),
            )
        )

    def emit_event(self, event: EventType) -> None:
        print(event.model_dump_json())
