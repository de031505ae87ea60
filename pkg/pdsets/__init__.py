from .errors import PdsetsError, ScenarioError, ScenarioNotFound
from .scenario import RunResult, Scenario
from .verdict import Verdict

__all__ = (
    "PdsetsError",
    "RunResult",
    "Scenario",
    "ScenarioError",
    "ScenarioNotFound",
    "Verdict",
)
