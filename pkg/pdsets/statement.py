from __future__ import annotations

from dataclasses import dataclass, replace
from typing import (
    TYPE_CHECKING,
    Iterable,
    List,
    Literal,
    NamedTuple,
    Optional,
    Protocol,
    Union,
    runtime_checkable,
)

from .algebra import ElementId, FiniteGroup, FiniteRing

if TYPE_CHECKING:
    from .verdict import Verdict

Structure = Union[FiniteGroup, FiniteRing]
Needs = Literal["group", "ring", "any", "none"]


class StatementConfig(NamedTuple):
    name: str
    exact: bool
    needs: Needs


@runtime_checkable
class HasStatementConfig(Protocol):
    statement_config: StatementConfig


class HasStatementCheck(Protocol):
    def check(self, ctx: Context) -> Verdict: ...  # pragma: no cover


@runtime_checkable
class Statement(HasStatementCheck, HasStatementConfig, Protocol):
    def __init__(self, *args, **kwargs) -> None:
        # allow any amount of args / kwargs for BaseModel and dataclasses.
        ...  # pragma: no cover


@dataclass(frozen=True)
class Context:
    """What a statement sees when it runs: the structure, the tuple budget, the seed."""

    structure: Optional[Structure] = None
    budget: Optional[int] = None
    seed: Optional[int] = None
    # False for re-verification: functions are rebuilt without memo
    memoize: bool = True

    def with_structure(self, structure: Optional[Structure]) -> Context:
        return replace(self, structure=structure)

    def fresh(self) -> Context:
        return replace(self, memoize=False)

    def group(self, statement: str = "") -> FiniteGroup:
        if self.structure is None:
            raise ValueError(f'"{statement}" needs a group, but no structure is set')
        if isinstance(self.structure, FiniteRing):
            return self.structure.additive_group()
        return self.structure

    def ring(self, statement: str = "") -> FiniteRing:
        if not isinstance(self.structure, FiniteRing):
            raise ValueError(f'"{statement}" needs a ring (e.g. "ZZ12" or "M2(Z2)")')
        return self.structure

    def element(self, item: Union[int, str]) -> ElementId:
        if self.structure is None:
            if isinstance(item, int):
                return item
            try:
                return int(item)
            except ValueError:
                raise ValueError(
                    f'Element "{item}" is a label, but no structure is set'
                ) from None
        # integers are carrier indices, strings are labels (Q8 has a label "1")
        if isinstance(item, int):
            if not 0 <= item < self.structure.order:
                raise ValueError(f"{item} is not an element of {self.structure.name}")
            return item
        if isinstance(self.structure, FiniteRing):
            return self.structure.additive_group().element_by_label(item)
        return self.structure.element_by_label(item)

    def elements(self, items: Iterable[Union[int, str]]) -> List[ElementId]:
        return [self.element(x) for x in items]

    def label(self, a: ElementId) -> str:
        if self.structure is None:
            return str(a)
        return self.structure.label(a)
