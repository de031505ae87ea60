from __future__ import annotations

from typing import TYPE_CHECKING, Literal, Optional, Protocol, runtime_checkable

if TYPE_CHECKING:
    from pdsets.search import SearchReport
    from pdsets.utils import ReportSummary
    from pdsets.verdict import Verdict


Level = Literal["info", "warn", "error"]


@runtime_checkable
class Output(Protocol):
    """
    The protocol all of pdsets' outputs must adhere to.
    """

    def start(self, command: str, source: Optional[str] = None) -> None: ...

    def verdict(self, v: Verdict) -> None: ...

    def report(self, r: SearchReport) -> None: ...

    def msg(self, msg: str, level: Level = "info") -> None: ...

    def end(self, summary: ReportSummary) -> None: ...
