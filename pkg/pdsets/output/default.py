from __future__ import annotations

from typing import TYPE_CHECKING, Dict, Optional

from rich.console import Console
from rich.panel import Panel
from rich.status import Status
from rich.table import Table
from rich.theme import Theme

from pdsets.utils import escape
from pdsets.verdict import describe_margin

from .output import Level

if TYPE_CHECKING:
    from pdsets.search import SearchReport
    from pdsets.utils import ReportSummary
    from pdsets.verdict import Verdict


MSG_STYLE: Dict[Level, str] = {
    "info": "[pipeline.msg]",
    "warn": "[pipeline.warn]",
    "error": "[pipeline.error]ERROR! ",
}

STATUS_STYLE = {
    "holds": "verdict.holds",
    "violated": "verdict.violated",
    "inconclusive": "verdict.inconclusive",
}


def format_msg(msg: str, level: Level, escape_msg: bool = True) -> str:
    _msg = escape(msg) if escape_msg else msg
    return f"{MSG_STYLE[level]}{_msg}[/]"


def format_verdict(v: Verdict) -> str:
    style = STATUS_STYLE[v.status]
    line = (
        f"[statement]{escape(v.statement)}[/] "
        f"{escape(v.relation())} [{style}]{v.status}[/] "
        f"[margin](margin {escape(describe_margin(v))})[/]"
    )
    if v.note:
        line += f" [note]{escape(v.note)}[/]"
    return line


def format_witness(v: Verdict) -> str:
    parts = [f"{escape(key)}: {escape(value)}" for key, value in v.witness.items()]
    return "\n".join(f"    - [witness]{p}[/]" for p in parts)


class Default:
    def __init__(
        self,
        theme: Optional[Theme] = None,
        show_witness: bool = True,
        console: Optional[Console] = None,
    ):
        if theme is None:
            theme = Theme(
                {
                    "info": "dim cyan",
                    "warning": "yellow",
                    "error": "bold red",
                    "status": "bold green",
                    "command": "bold cyan",
                    "statement": "cyan",
                    "margin": "dim",
                    "note": "dim italic",
                    "witness": "dim",
                    "verdict.holds": "bold green",
                    "verdict.violated": "bold red",
                    "verdict.inconclusive": "bold yellow",
                    "pipeline.msg": "",
                    "pipeline.warn": "yellow",
                    "pipeline.error": "bold red",
                    "summary.done": "bold green",
                    "summary.fail": "red",
                    "summary.violated": "bold red",
                }
            )
        self.show_witness = show_witness
        self.console = console or Console(theme=theme, highlight=False)
        self.status = Status("", console=self.console)

    def start(self, command: str, source: Optional[str] = None) -> None:
        title = f"[command]{escape(command)}[/]"
        if source:
            title += f' "{escape(source)}"'
        self.console.rule(title, align="left", style="command")
        self.status.update(f"[status]{escape(command)}[/]")
        self.status.start()

    def verdict(self, v: Verdict) -> None:
        self.console.print(format_verdict(v))
        if self.show_witness and (v.violated or v.status == "inconclusive"):
            witness = format_witness(v)
            if witness:
                self.console.print(witness)

    def report(self, r: SearchReport) -> None:
        mode = "exhaustive" if r.exhaustive else "random"
        table = Table(title=f"search {escape(r.probe)} ({mode}, seed {r.seed})")
        table.add_column("instances", justify="right")
        table.add_column("violations", justify="right")
        table.add_column("skipped", justify="right")
        table.add_column("errors", justify="right")
        table.add_column("min margin", justify="right")
        min_margin = describe_margin(r.min_margin) if r.min_margin is not None else "-"
        table.add_row(
            str(r.instances),
            str(len(r.violations)),
            str(r.skipped),
            str(r.errors),
            escape(min_margin),
        )
        self.console.print(table)
        if r.partial:
            self.console.print(
                format_msg("partial report, some instances ran out of budget", "warn")
            )
        if r.unconfirmed:
            self.console.print(
                format_msg(f"{r.unconfirmed} violations failed re-verification", "warn")
            )
        for v in r.violations[:5]:
            self.verdict(v)
        if len(r.violations) > 5:
            self.console.print(f"    ... and {len(r.violations) - 5} more violations")

    def msg(self, msg: str, level: Level = "info") -> None:
        self.console.print(format_msg(msg, level))

    def end(self, summary: ReportSummary) -> None:
        self.status.stop()
        self.console.print()
        total = summary.holds + summary.violated + summary.inconclusive + summary.errors
        if total == 0:
            self.console.print("[summary.done]Nothing to do[/]")
            return
        parts = [f"[summary.done]holds {summary.holds}[/]"]
        parts.append(f"[summary.violated]violated {summary.violated}[/]")
        if summary.inconclusive:
            parts.append(f"[warning]inconclusive {summary.inconclusive}[/]")
        parts.append(f"[summary.fail]errors {summary.errors}[/]")
        self.console.print(" / ".join(parts))
        if summary.violated:
            self.console.print(Panel("VIOLATION FOUND", style="summary.violated"))
