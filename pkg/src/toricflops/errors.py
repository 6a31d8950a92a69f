"""Exception types shared across the package.

The CLI maps these onto process exit codes: hypothesis violations exit 2,
input/parse problems exit 3, the step-limit guard exits 4, and a failed
verification report exits 1.
"""

from __future__ import annotations


class ToricFlopsError(Exception):
    """Base class for all package errors."""


class InputFormatError(ToricFlopsError):
    """Malformed input artifact (JSON schema, rational encoding, CLI args)."""


class HypothesisError(ToricFlopsError):
    """A required hypothesis of the decomposition theorem fails on the input.

    ``kind`` is a stable machine-readable tag so callers (and tests) can
    distinguish which hypothesis broke.
    """

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


class FanValidationError(HypothesisError):
    """A fan violates one of its structural invariants."""

    def __init__(self, kind: str, message: str):
        super().__init__(kind, message)


class NonPointedConeError(ToricFlopsError):
    """Extreme-ray enumeration was asked for a cone containing a line."""

    def __init__(self, lineality: tuple[int, ...]):
        super().__init__(f"cone is not pointed; contains the line through {lineality}")
        self.lineality = lineality


class StepLimitError(ToricFlopsError):
    """The flop loop hit its step bound (suspected non-termination)."""

    def __init__(self, max_steps: int, trace):
        super().__init__(f"step limit {max_steps} reached without hitting the target fan")
        self.max_steps = max_steps
        self.trace = trace


class InternalInvariantError(ToricFlopsError):
    """A runtime invariant the theorem guarantees has failed.

    Under valid hypotheses this is unreachable; if it fires, either the input
    violated an unchecked hypothesis or there is a bug.
    """
