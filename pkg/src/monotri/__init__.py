"""Exact counting of monotone triangles and halved monotone triangles."""
from .errors import (InvalidInputError, NotInvertibleError, OutOfRegionWarning,
                     SizeGuardWarning, VerificationError)
from .poly import K, X, MultiPoly, Var, generalized_binomial
from .shiftops import OperatorKind, ShiftOp, apply_op, build_operator, op_invert

__version__ = "0.1.0"
