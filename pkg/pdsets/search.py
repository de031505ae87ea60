"""
Counterexample search: runs a probe's instances (seeded random trials or the probe's
whole space) through its statement and collects the violations.

Trial ``i`` draws from ``Random(seed * 1_000_003 + i)``, and results are merged in
trial order, so a report depends on the seed only, never on the worker count.
Every violation is checked a second time from a rebuilt statement without memoized
functions before it is reported.
"""

from __future__ import annotations

import dataclasses
import time
from functools import lru_cache
from random import Random
from typing import TYPE_CHECKING, Any, List, NamedTuple, Optional, Tuple

from natsort import natsorted
from pydantic import BaseModel, ConfigDict

from .algebra import (
    FiniteGroup,
    cyclic_group,
    dihedral_group,
    direct_product,
    quaternion_group,
)
from .errors import BudgetExceeded, HypothesisError, PdsetsError
from .logger import logger
from .parallel import process_parallel
from .verdict import Verdict

if TYPE_CHECKING:
    from .probe import Instance, Probe
    from .statement import Context, Statement

SEED_STRIDE = 1_000_003


# catalog ##############################################################################


def _cyclic_products(max_order: int, smallest: int = 2, factors: int = 3) -> List[List[int]]:
    """Nondecreasing lists of at least two cyclic orders with product <= max_order."""
    result: List[List[int]] = []

    def extend(prefix: List[int], product: int) -> None:
        if len(prefix) >= 2:
            result.append(list(prefix))
        if len(prefix) == factors:
            return
        start = prefix[-1] if prefix else smallest
        n = start
        while product * n <= max_order:
            extend(prefix + [n], product * n)
            n += 1

    extend([], 1)
    return result


@lru_cache(maxsize=8)
def _catalog(max_order: int) -> Tuple[FiniteGroup, ...]:
    groups = {}
    for n in range(1, max_order + 1):
        G = cyclic_group(n)
        groups[G.name] = G
    for n in range(3, max_order // 2 + 1):
        G = dihedral_group(n)
        groups[G.name] = G
    if max_order >= 8:
        Q = quaternion_group()
        groups[Q.name] = Q
    for orders in _cyclic_products(max_order):
        G = cyclic_group(orders[0])
        for n in orders[1:]:
            G = direct_product(G, cyclic_group(n))
        groups.setdefault(G.name, G)
    return tuple(natsorted(groups.values(), key=lambda G: f"{G.order:04d} {G.name}"))


def group_catalog(max_order: int = 16) -> List[FiniteGroup]:
    """
    Cyclic groups, dihedral groups, Q8 and direct products of cyclic groups of order
    at most `max_order`, one per name, ordered by order.

    >>> [G.name for G in group_catalog(4)]
    ['Z1', 'Z2', 'Z3', 'Z2xZ2', 'Z4']
    """
    if max_order < 1:
        raise ValueError(f"max_order must be at least 1, got {max_order}")
    return list(_catalog(max_order))


# search ###############################################################################


class SearchReport(BaseModel):
    model_config = ConfigDict(extra="forbid")

    probe: str
    statement: str
    seed: int
    exhaustive: bool
    instances: int = 0
    # instances refused because a hypothesis of the statement failed
    skipped: int = 0
    errors: int = 0
    violations: List[Verdict] = []
    # violations that did not survive re-verification
    unconfirmed: int = 0
    min_margin: Optional[Verdict] = None
    # some instances ran out of budget
    partial: bool = False
    wall_time_ms: float = 0.0

    @property
    def violated(self) -> bool:
        return bool(self.violations)

    def model_dump_stable(self) -> dict:
        """The report without timing fields."""
        data = self.model_dump(mode="json", exclude={"wall_time_ms"})
        for v in [*data["violations"], data["min_margin"]]:
            if v is not None:
                v.pop("runtime_ms", None)
        return data


class Outcome(NamedTuple):
    index: int
    instance: Optional[Instance]
    verdict: Optional[Verdict]
    # "ok", "skipped", "budget" or "error"
    kind: str


def trial_rng(seed: int, index: int) -> Random:
    return Random(seed * SEED_STRIDE + index)


def rebuild(statement: Statement) -> Statement:
    """A fresh statement object from the plain field values of `statement`."""
    fields = dataclasses.asdict(statement)  # type: ignore[call-overload]
    return type(statement)(**fields)


def _check(ctx: Context, index: int, instance: Instance) -> Outcome:
    run_ctx = ctx.with_structure(instance.structure)
    start = time.perf_counter()
    try:
        verdict = instance.statement.check(run_ctx)
    except BudgetExceeded as e:
        logger.warning("Instance %s ran out of budget: %s", index, e)
        return Outcome(index, instance, None, "budget")
    except HypothesisError as e:
        logger.debug("Instance %s skipped: %s", index, e)
        return Outcome(index, instance, None, "skipped")
    except PdsetsError as e:
        logger.info("Instance %s failed: %s", index, e)
        return Outcome(index, instance, None, "error")
    runtime_ms = (time.perf_counter() - start) * 1000
    witness: dict[str, Any] = {**verdict.witness, "trial": index}
    if instance.structure is not None:
        witness.setdefault("structure", instance.structure.name)
    verdict = verdict.model_copy(update={"witness": witness})
    return Outcome(index, instance, verdict.with_run_info(ctx.seed, runtime_ms), "ok")


def reverify(ctx: Context, instance: Instance) -> bool:
    """Recomputes a violation from a rebuilt statement, without memoized functions."""
    run_ctx = ctx.with_structure(instance.structure).fresh()
    try:
        return rebuild(instance.statement).check(run_ctx).violated
    except PdsetsError as e:
        logger.warning("Re-verification failed: %s", e)
        return False


def _margin_key(v: Verdict) -> float:
    return float(v.margin)


def run_search(
    probe: Probe,
    ctx: Context,
    max_workers: Optional[int] = None,
) -> SearchReport:
    seed = ctx.seed if ctx.seed is not None else 0
    ctx = dataclasses.replace(ctx, seed=seed)
    config = probe.probe_config
    start = time.perf_counter()

    outcomes: List[Optional[Outcome]]
    if probe.exhaustive:
        if not config.exhaustive:
            raise ValueError(f'Probe "{config.name}" has no exhaustive mode')
        instances = list(probe.enumerate(ctx))
        outcomes = process_parallel(
            list(enumerate(instances)),
            lambda job: _check(ctx, job[0], job[1]),
            max_workers=max_workers,
        )
    else:

        def trial(index: int) -> Outcome:
            instance = probe.sample(ctx, trial_rng(seed, index))
            return _check(ctx, index, instance)

        outcomes = process_parallel(
            list(range(probe.trials)), trial, max_workers=max_workers
        )

    report = SearchReport(
        probe=config.name,
        statement=config.statement,
        seed=seed,
        exhaustive=probe.exhaustive,
    )
    best: Optional[Verdict] = None
    for outcome in outcomes:
        if outcome is None:
            report.errors += 1
            continue
        report.instances += 1
        if outcome.kind == "skipped":
            report.skipped += 1
        elif outcome.kind == "budget":
            report.partial = True
        elif outcome.kind == "error":
            report.errors += 1
        if outcome.verdict is None:
            continue
        v = outcome.verdict
        if best is None or _margin_key(v) < _margin_key(best):
            best = v
        if v.violated:
            assert outcome.instance is not None
            if reverify(ctx, outcome.instance):
                report.violations.append(v)
            else:
                report.unconfirmed += 1
                logger.warning(
                    'Unconfirmed violation of "%s" in trial %s',
                    config.statement,
                    outcome.index,
                )
    report.min_margin = best
    report.wall_time_ms = (time.perf_counter() - start) * 1000
    if report.partial:
        logger.warning('Search "%s" is partial, some instances ran out of budget', config.name)
    logger.info(
        'Search "%s": %s instances, %s violations, %s skipped',
        config.name,
        report.instances,
        len(report.violations),
        report.skipped,
    )
    return report
