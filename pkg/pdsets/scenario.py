"""
Scenario files: a structure, a seed, a budget and lists of statements to verify and
probes to search, each given as a single-key mapping ``{name: {params}}``.
"""

from __future__ import annotations

import textwrap
import time
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator
from pydantic.dataclasses import dataclass

from .algebra import load_table, structure_by_name
from .errors import HypothesisError, ScenarioError
from .logger import logger
from .output import Default, Output
from .probe import Probe
from .registry import probe_by_name, statement_by_name
from .search import SearchReport, run_search
from .statement import Context, Statement, Structure
from .utils import ReportSummary
from .validators import flatten
from .verdict import Verdict

Section = Literal["verify", "search"]


def default_yaml_cnst(loader, tag_suffix, node):
    # disable yaml constructors for strings starting with exclamation marks
    # https://stackoverflow.com/a/13281292/300783
    return str(node.tag)


yaml.add_multi_constructor("", default_yaml_cnst, Loader=yaml.SafeLoader)


def _instantiate(Cls, value):
    if value is None:
        return Cls()
    elif isinstance(value, dict):
        return Cls(**value)
    else:
        return Cls(value)


def statement_from_dict(d: Dict) -> Statement:
    """
    :param d:
        A dict in the forms of
        { "statement-name": None }
        { "statement-name": {"param": "value"} }
    :returns:
        An instantiated statement.
    """
    if not len(d.keys()) == 1:
        raise ValueError("Statement definition must have a single key")
    name, value = next(iter(d.items()))
    return _instantiate(statement_by_name(name), value)


def probe_from_dict(d: Dict) -> Probe:
    """
    :param d:
        A dict in the forms of
        { "probe-name": None }
        { "probe-name": {"param": "value"} }
    :returns:
        An instantiated probe.
    """
    if not len(d.keys()) == 1:
        raise ValueError("Probe definition must have a single key")
    name, value = next(iter(d.items()))
    return _instantiate(probe_by_name(name), value)


def _from_items(items: Any, parse) -> List:
    result = []
    for i, x in enumerate(flatten(items)):
        if isinstance(x, str):
            x = {x: None}
        if not isinstance(x, dict):
            result.append(x)
            continue
        try:
            result.append(parse(x))
        except ValidationError as e:
            name = next(iter(x), "?")
            raise ValueError(f"#{i} ({name}): {e}") from e
    return result


def yaml_line_map(text: str) -> Dict[Tuple, int]:
    """1-based source lines of every mapping key and sequence item, keyed by path."""
    lines: Dict[Tuple, int] = {}
    root = yaml.compose(text, Loader=yaml.SafeLoader)

    def walk(node, path: Tuple) -> None:
        lines[path] = node.start_mark.line + 1
        if isinstance(node, yaml.MappingNode):
            for key, value in node.value:
                walk(value, path + (key.value,))
                lines[path + (key.value,)] = key.start_mark.line + 1
        elif isinstance(node, yaml.SequenceNode):
            for i, value in enumerate(node.value):
                walk(value, path + (i,))

    if root is not None:
        walk(root, ())
    return lines


@dataclass(config=ConfigDict(extra="forbid", arbitrary_types_allowed=True))
class TableSource:
    table: Path


class RunResult(BaseModel):
    """Everything one command produced, as written by ``--json``."""

    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)

    command: str
    source: Optional[str] = None
    seed: Optional[int] = None
    verdicts: List[Verdict] = []
    reports: List[SearchReport] = []
    summary: ReportSummary = Field(default_factory=ReportSummary)

    @property
    def exit_code(self) -> int:
        return self.summary.exit_code()


@dataclass(config=ConfigDict(extra="forbid", arbitrary_types_allowed=True))
class Scenario:
    structure: Union[str, TableSource, None] = None
    seed: Optional[int] = None
    budget: Optional[int] = Field(default=None, gt=0)
    verify: List[Statement] = Field(default_factory=list)
    search: List[Probe] = Field(default_factory=list)

    _scenario_path: Optional[Path] = None

    @field_validator("verify", mode="before")
    def validate_verify(cls, value):
        return _from_items(value, statement_from_dict)

    @field_validator("search", mode="before")
    def validate_search(cls, value):
        return _from_items(value, probe_from_dict)

    @classmethod
    def from_string(cls, text: str, scenario_path: Optional[Path] = None) -> Scenario:
        dedented = textwrap.dedent(text)
        as_dict = yaml.load(dedented, Loader=yaml.SafeLoader)
        try:
            if not as_dict:
                raise ValueError("Scenario is empty")
            if not isinstance(as_dict, dict):
                raise ValueError("Scenario must be a mapping")
            inst = cls(**as_dict)
            inst._scenario_path = scenario_path
            return inst
        except ValidationError as e:
            raise ScenarioError(
                e=e, scenario_path=scenario_path, lines=yaml_line_map(dedented)
            ) from e

    @classmethod
    def from_path(cls, scenario_path: Path) -> Scenario:
        text = scenario_path.read_text(encoding="utf-8")
        return cls.from_string(text, scenario_path=scenario_path)

    def load_structure(self) -> Optional[Structure]:
        if self.structure is None:
            return None
        if isinstance(self.structure, str):
            return structure_by_name(self.structure)
        path = self.structure.table.expanduser()
        if not path.is_absolute() and self._scenario_path is not None:
            path = self._scenario_path.parent / path
        return load_table(path)

    def context(self, seed: Optional[int] = None, budget: Optional[int] = None) -> Context:
        return Context(
            structure=self.load_structure(),
            budget=budget if budget is not None else self.budget,
            seed=seed if seed is not None else self.seed,
        )

    def execute(
        self,
        section: Section = "verify",
        output: Output = Default(),
        seed: Optional[int] = None,
        budget: Optional[int] = None,
        threads: Optional[int] = None,
    ) -> RunResult:
        source = str(self._scenario_path) if self._scenario_path else None
        result = RunResult(command=section, source=source)
        output.start(command=section, source=source)
        try:
            ctx = self.context(seed=seed, budget=budget)
            result.seed = ctx.seed
            if section == "verify":
                self._verify(ctx, output, result)
            else:
                self._search(ctx, output, result, threads)
        except ValueError as e:
            # also structure and table errors
            output.msg(str(e), level="error")
            result.summary.errors += 1
        finally:
            output.end(result.summary)
        return result

    def _verify(self, ctx: Context, output: Output, result: RunResult) -> None:
        if not self.verify:
            output.msg("No statements to verify", level="warn")
        for statement in self.verify:
            name = statement.statement_config.name
            start = time.perf_counter()
            try:
                verdict = statement.check(ctx)
            except HypothesisError as e:
                logger.info('"%s" refused: %s', name, e)
                output.msg(f"{name}: {e}", level="error")
                result.summary.errors += 1
                continue
            except ValueError as e:
                output.msg(f"{name}: {e}", level="error")
                result.summary.errors += 1
                continue
            runtime_ms = (time.perf_counter() - start) * 1000
            verdict = verdict.with_run_info(ctx.seed, runtime_ms)
            result.verdicts.append(verdict)
            result.summary.count(verdict.status)
            output.verdict(verdict)

    def _search(
        self,
        ctx: Context,
        output: Output,
        result: RunResult,
        threads: Optional[int],
    ) -> None:
        if not self.search:
            output.msg("No probes to search", level="warn")
        for probe in self.search:
            report = run_search(probe, ctx, max_workers=threads)
            result.reports.append(report)
            if report.errors:
                output.msg(
                    f"{report.probe}: {report.errors} instances failed", level="warn"
                )
            output.report(report)
            result.summary.count("violated" if report.violated else "holds")
