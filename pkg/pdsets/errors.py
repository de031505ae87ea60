from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple

from pydantic import ValidationError


class PdsetsError(ValueError):
    """Base class of all domain errors raised by pdsets."""


# structures ###########################################################################


class StructureError(PdsetsError):
    pass


class BadTableShape(StructureError):
    def __init__(self, order: int, detail: str):
        self.order = order
        super().__init__(f"Table is not {order}x{order}: {detail}")


class NotClosed(StructureError):
    def __init__(self, row: int, col: int, value: Any, order: int):
        self.entry = (row, col)
        super().__init__(
            f"Entry ({row}, {col}) = {value!r} is not an element index below {order}"
        )


class NoIdentity(StructureError):
    def __init__(self, table: str = "op"):
        super().__init__(f'No element acts as a two-sided identity in "{table}"')


class NoInverse(StructureError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"Element {element} has no two-sided inverse")


class NotAssociative(StructureError):
    def __init__(self, a: int, b: int, c: int, table: str = "op"):
        self.triple = (a, b, c)
        super().__init__(f'"{table}" is not associative on ({a}, {b}, {c})')


class NotDistributive(StructureError):
    def __init__(self, a: int, b: int, c: int, side: str):
        self.triple = (a, b, c)
        super().__init__(f"mul does not distribute over add ({side}) on ({a}, {b}, {c})")


class NotAbelianGroup(StructureError):
    def __init__(self, a: int, b: int):
        self.pair = (a, b)
        super().__init__(f"Addition is not commutative on ({a}, {b})")


class TooLargeToValidate(StructureError):
    def __init__(self, order: int, limit: int):
        super().__init__(
            f"Tables of order {order} > {limit} are only accepted from built-in "
            "constructors"
        )


class InvalidModulus(StructureError):
    def __init__(self, value: Any, reason: str):
        super().__init__(f"Invalid modulus {value!r}: {reason}")


class TableParseError(StructureError):
    def __init__(self, line: int, msg: str):
        self.line = line
        super().__init__(f"line {line}: {msg}")


class UnknownStructure(StructureError):
    def __init__(self, name: str):
        super().__init__(f'Unknown structure "{name}"')


# functions, ground sets and enumeration ##############################################


class DomainError(PdsetsError):
    pass


class EmptyOperand(DomainError):
    def __init__(self, position: int):
        self.position = position
        super().__init__(f"Operand #{position + 1} of the sumset is empty")


class BadArity(DomainError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"Expected a tuple of length {expected}, got {got}")


class ElementOutOfGround(DomainError):
    def __init__(self, index: int, element: Any):
        self.index = index
        self.element = element
        super().__init__(f"Element {element!r} is not in ground set X_{index}")


class YNotInImage(DomainError):
    def __init__(self, value: Any):
        self.value = value
        super().__init__(f"Value {value} is never attained")


class EmptyMask(DomainError):
    def __init__(self):
        super().__init__("The empty subset is not allowed here")


class BudgetExceeded(DomainError):
    def __init__(self, needed: int, budget: int, what: str = "tuples"):
        self.needed = needed
        self.budget = budget
        super().__init__(f"Enumeration needs {needed:,} {what}, budget is {budget:,}")


class MiddleEnumerationBudgetExceeded(BudgetExceeded):
    def __init__(self, needed: int, budget: int, pair: Tuple[int, int]):
        self.pair = pair
        super().__init__(needed, budget, what=f"middle tuples for A{pair}")


# subset families ######################################################################


class FamilyError(PdsetsError):
    pass


class NotRegular(FamilyError):
    def __init__(self, degrees: Sequence[int]):
        self.degrees = tuple(degrees)
        super().__init__(f"Family is not regular, degrees are {list(degrees)}")


class Infeasible(FamilyError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"Index {index} lies in no member of the family")


class NestedPair(FamilyError):
    def __init__(self, first: str, second: str):
        super().__init__(f"Members {first} and {second} are nested")


class NotACovering(FamilyError):
    def __init__(self, index: int, total: Any):
        self.index = index
        super().__init__(f"Index {index} is covered with total weight {total} < 1")


class InvalidChain(FamilyError):
    pass


# theorem hypotheses ###################################################################


class HypothesisError(PdsetsError):
    """A verifier refuses to run because a hypothesis of its statement fails."""


class NotStronglyPD(HypothesisError):
    def __init__(self, witness: Any):
        self.witness = witness
        super().__init__(f"Function is not strongly partition-determined: {witness}")


class NotPD(HypothesisError):
    def __init__(self, witness: Any):
        self.witness = witness
        super().__init__(f"Function is not partition-determined: {witness}")


class NotAbelian(HypothesisError):
    def __init__(self, name: str):
        super().__init__(f'Group "{name}" is not abelian')


class NotCommutative(HypothesisError):
    def __init__(self, name: str):
        super().__init__(f'Ring "{name}" does not have commutative multiplication')


class DNotInSumset(HypothesisError):
    def __init__(self, element: Any):
        self.element = element
        super().__init__(f"D contains {element}, which is not in B_1 + ... + B_k")


class NotAPartition(HypothesisError):
    def __init__(self, index: int, total: Any):
        self.index = index
        super().__init__(
            f"Weights are not a fractional partition: index {index} has total {total}"
        )


class IdentityFailsAt(HypothesisError):
    def __init__(self, x: Tuple[int, ...], lhs: Any, rhs: Any):
        self.x = x
        super().__init__(f"F(x) = {lhs} but f(g(x)) = {rhs} at x = {x}")


# scenarios ############################################################################


class UnknownItem(PdsetsError):
    def __init__(self, item: str, known: Iterable[str] = ()):
        self.item = item
        known_list = ", ".join(known)
        super().__init__(f'Unknown item "{item}". Known items: {known_list}')


class ScenarioError(ValueError):
    def __init__(
        self,
        e: ValidationError,
        scenario_path: Optional[Path] = None,
        lines: Optional[Dict[Tuple, int]] = None,
    ):
        self.e = e
        self.scenario_path = scenario_path.resolve() if scenario_path else None
        self.lines = lines or {}

    def _line_for(self, loc: Tuple) -> Optional[int]:
        # longest known prefix of the error location
        for end in range(len(loc), 0, -1):
            line = self.lines.get(tuple(loc[:end]))
            if line is not None:
                return line
        return None

    def __str__(self):
        count = self.e.error_count()
        title = self.scenario_path or self.e.title

        lines = [
            f'{count} validation error{"s" if count != 1 else ""} in "{title}"',
            "",
        ]
        for err in self.e.errors(include_url=False):
            loc = ".".join(str(x) for x in err["loc"])
            line = self._line_for(tuple(err["loc"]))
            where = f" (line {line})" if line is not None else ""
            inp_name = err["input"]
            inp_type = type(err["input"]).__name__
            inp = f'[input_value="{inp_name}", input_type={inp_type}]'
            lines.append(f"{loc}{where}")
            lines.append(f"  {err['msg']} {inp}")
        return "\n".join(lines)

    def json(self):
        return self.e.json()


class ScenarioNotFound(FileNotFoundError):
    def __init__(
        self,
        scenario: str,
        search_pathes: Iterable[Path] = tuple(),
    ):
        self.scenario = scenario
        self.search_pathes = search_pathes

    def __str__(self):
        msg = f'Cannot find scenario "{self.scenario}".'
        if self.search_pathes:
            path_listing = "\n".join(f' - "{path}"' for path in self.search_pathes)
            return f"{msg}\nSearch locations:\n{path_listing}"
        return msg
