"""
Core package: operator interfaces, the inclusion-system model and the forward-backward map.
"""

from core.errors import (
    SplittingError,
    ContractViolation,
    NumericError,
    ConvergenceFailure,
    LineSearchFailure,
)
from core.operators import (
    EvaluationCounter,
    SingleValuedOperator,
    SetValuedOperator,
    FunctionOperator,
    as_point,
)
from core.system import InclusionSystem, forward_backward, residual, verify_solution
