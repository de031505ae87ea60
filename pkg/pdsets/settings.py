import os

ENV_PDSETS_TUPLE_BUDGET = os.environ.get("PDSETS_TUPLE_BUDGET")
ENV_PDSETS_BFS_BUDGET = os.environ.get("PDSETS_BFS_BUDGET")
ENV_PDSETS_ENTROPY_TOLERANCE = os.environ.get("PDSETS_ENTROPY_TOLERANCE")
ENV_PDSETS_VIOLATION_THRESHOLD = os.environ.get("PDSETS_VIOLATION_THRESHOLD")

# maximum number of ground set indices (subsets are bitmasks)
K_MAX = 24

# exhaustive enumerations over X_[k] refuse to run above this many tuples
TUPLE_BUDGET = int(ENV_PDSETS_TUPLE_BUDGET or 1_000_000)

# visited families in the compression breadth-first search
BFS_BUDGET = int(ENV_PDSETS_BFS_BUDGET or 100_000)

# entropy verdicts: margin >= -ENTROPY_TOLERANCE holds,
# margin < -VIOLATION_THRESHOLD is violated, anything between is inconclusive.
ENTROPY_TOLERANCE = float(ENV_PDSETS_ENTROPY_TOLERANCE or 1e-9)
VIOLATION_THRESHOLD = float(ENV_PDSETS_VIOLATION_THRESHOLD or 1e-6)

# tables from untrusted sources are checked for associativity up to this order
ASSOCIATIVITY_CHECK_LIMIT = 64

# PDFunction memo stops inserting after this many entries
MEMO_LIMIT = 250_000
