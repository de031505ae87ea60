__doc__ = """
pdsets - Check inequalities for compound sets and partition-determined functions.

Usage:
  pdsets repro   [options] <item>
  pdsets verify  [options] <scenario>
  pdsets search  [options] <scenario>
  pdsets check   <scenario>
  pdsets info    [--table] <structure>...
  pdsets list
  pdsets --version
  pdsets --help

Commands:
  repro      Reproduce a worked example ("all" runs every item).
  verify     Check the statements of a scenario.
  search     Run the counterexample searches of a scenario.
  check      Check scenario file validity.
  info       Describe a structure, e.g. "D4", "dihedral 4", "ZZ12" or a table file.
               Use --table to print the Cayley table(s)
  list       Lists reproduction items, statements, probes and scenarios.

Options:
  <scenario>                      A scenario name or path to a scenario file.
  -F --format (default|jsonl)     The output format [Default: default]
  --json <path>                   Write the full verdicts / search reports as JSON.
  --seed <seed>                   Seed for random searches (overrides the scenario)
  --budget <tuples>               Tuple budget for enumerations (overrides the scenario)
  --threads <n>                   Maximum number of worker threads for searches
  -h --help                       Show this help page.

Exit codes: 0 holds / no violation / reproduction matches, 2 violation found, 1 error.
"""
import sys
from pathlib import Path
from typing import Annotated, List, Literal, Optional, Union

from docopt import docopt
from pydantic import BaseModel, ConfigDict, Field, ValidationError
from pydantic.functional_validators import BeforeValidator
from rich.console import Console
from rich.table import Table
from yaml import YAMLError

from pdsets import PdsetsError, Scenario, ScenarioError, ScenarioNotFound
from pdsets.algebra import FiniteGroup, format_table, load_table, structure_by_name
from pdsets.find_scenario import find_scenario, list_scenarios
from pdsets.logger import enable_logfile
from pdsets.output import JSONL, Default, Output
from pdsets.registry import PROBES, STATEMENTS
from pdsets.repro import SUMMARIES, run_repro
from pdsets.scenario import RunResult
from pdsets.statement import Structure
from pdsets.utils import escape

from .__version__ import __version__

OutputFormat = Annotated[Literal["default", "jsonl"], BeforeValidator(lambda v: v.lower())]

console = Console()

# "dihedral 4" and friends for `pdsets info`
FAMILY_NAMES = {
    "cyclic": "Z{}",
    "dihedral": "D{}",
    "ring": "ZZ{}",
    "matrix": "M2(Z{})",
}


def _output_for_format(format: OutputFormat) -> Output:
    if format == "default":
        return Default()
    elif format == "jsonl":
        return JSONL()
    raise ValueError(f"{format} is not a valid output format.")


def _write_json(result: RunResult, path: Optional[Path]) -> None:
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(result.model_dump_json(indent=2), encoding="utf-8")


def load_scenario(name_or_path: str) -> Scenario:
    return Scenario.from_path(find_scenario(name_or_path))


def repro(item: str, format: OutputFormat, json_path: Optional[Path], seed: Optional[int]) -> int:
    result = run_repro(item, output=_output_for_format(format), seed=seed)
    _write_json(result, json_path)
    return result.exit_code


def execute(
    scenario: str,
    section: Literal["verify", "search"],
    format: OutputFormat,
    json_path: Optional[Path],
    seed: Optional[int],
    budget: Optional[int],
    threads: Optional[int],
) -> int:
    result = load_scenario(scenario).execute(
        section=section,
        output=_output_for_format(format),
        seed=seed,
        budget=budget,
        threads=threads,
    )
    _write_json(result, json_path)
    return result.exit_code


def check(scenario: str) -> None:
    path = find_scenario(scenario)
    inst = Scenario.from_path(path)
    inst.load_structure()
    console.print(f'No problems found in "{escape(path)}".')


def resolve_structure(words: List[str]) -> Structure:
    if len(words) == 2 and words[0].lower() in FAMILY_NAMES:
        return structure_by_name(FAMILY_NAMES[words[0].lower()].format(words[1]))
    if len(words) == 1 and words[0].lower() == "quaternion":
        return structure_by_name("Q8")
    text = " ".join(words)
    as_path = Path(text).expanduser()
    if as_path.is_file():
        return load_table(as_path)
    return structure_by_name(text)


def info(words: List[str], table: bool) -> None:
    structure = resolve_structure(words)
    grid = Table(show_header=False)
    grid.add_column(style="cyan")
    grid.add_column()
    grid.add_row("name", escape(structure.name))
    grid.add_row("order", str(structure.order))
    if isinstance(structure, FiniteGroup):
        grid.add_row("kind", "group")
        grid.add_row("abelian", "yes" if structure.is_abelian() else "no")
        grid.add_row("identity", escape(structure.label(structure.identity)))
    else:
        grid.add_row("kind", "ring")
        grid.add_row("abelian addition", "yes")
        grid.add_row("commutative mul", "yes" if structure.commutative_mul else "no")
        grid.add_row("zero", escape(structure.label(structure.zero)))
    if structure.labels is not None:
        labels = ", ".join(f"{i}={label}" for i, label in enumerate(structure.labels))
        grid.add_row("labels", escape(labels))
    console.print(grid)
    if table:
        console.print(escape(format_table(structure)), end="")


def list_() -> None:
    items = Table(title="reproductions")
    items.add_column("Item")
    items.add_column("Result", style="dim")
    for name, summary in SUMMARIES.items():
        items.add_row(name, escape(summary))
    console.print(items)

    statements = Table(title="statements")
    statements.add_column("Statement")
    statements.add_column("Exact")
    statements.add_column("Needs", style="dim")
    for name, cls in STATEMENTS.items():
        config = cls.statement_config
        statements.add_row(name, "yes" if config.exact else "bits", config.needs)
    console.print(statements)

    probes = Table(title="probes")
    probes.add_column("Probe")
    probes.add_column("Statement")
    probes.add_column("Exhaustive", style="dim")
    for name, cls in PROBES.items():
        config = cls.probe_config
        probes.add_row(name, config.statement, "yes" if config.exhaustive else "no")
    console.print(probes)

    scenarios = Table(title="scenarios")
    scenarios.add_column("Scenario")
    scenarios.add_column("Path", no_wrap=True, style="dim")
    for path in list_scenarios():
        scenarios.add_row(path.stem, escape(path))
    console.print(scenarios)


class CliArgs(BaseModel):
    model_config = ConfigDict(extra="forbid")

    # commands
    repro: bool
    verify: bool
    search: bool
    check: bool
    info: bool
    list: bool

    item: Optional[str] = Field(..., alias="<item>")
    scenario: Optional[str] = Field(..., alias="<scenario>")
    structure: List[str] = Field(default_factory=list, alias="<structure>")
    table: bool = Field(False, alias="--table")

    format: OutputFormat = Field("default", alias="--format")
    json_path: Optional[Path] = Field(None, alias="--json")
    seed: Optional[int] = Field(None, alias="--seed")
    budget: Optional[int] = Field(None, alias="--budget", gt=0)
    threads: Optional[int] = Field(None, alias="--threads", ge=1)

    # docopt options
    version: bool = Field(..., alias="--version")
    help: bool = Field(..., alias="--help")


def cli(argv: Union[list[str], str, None] = None) -> None:
    enable_logfile()
    assert __doc__ is not None
    parsed_args = docopt(
        __doc__,
        argv=argv,
        default_help=True,
        version=f"pdsets v{__version__}",
    )
    exit_code = 0
    try:
        args = CliArgs.model_validate(parsed_args)
        if args.repro:
            assert args.item is not None
            exit_code = repro(args.item, args.format, args.json_path, args.seed)
        elif args.verify or args.search:
            assert args.scenario is not None
            exit_code = execute(
                scenario=args.scenario,
                section="verify" if args.verify else "search",
                format=args.format,
                json_path=args.json_path,
                seed=args.seed,
                budget=args.budget,
                threads=args.threads,
            )
        elif args.check:
            assert args.scenario is not None
            check(args.scenario)
        elif args.info:
            info(args.structure, table=args.table)
        elif args.list:
            list_()
    except (ScenarioError, ScenarioNotFound) as e:
        console.print(f"[red]Error: Scenario problem[/]\n{escape(e)}")
        sys.exit(1)
    except ValidationError as e:
        console.print(f"[red]Error: Invalid CLI arguments[/]\n{escape(e)}")
        sys.exit(1)
    except YAMLError as e:
        console.print(f"[red]Error: YAML syntax error[/]\n{escape(e)}")
        sys.exit(1)
    except (PdsetsError, ValueError) as e:
        console.print(f"[red]Error:[/] {escape(e)}")
        sys.exit(1)
    sys.exit(exit_code)


if __name__ == "__main__":
    cli()
