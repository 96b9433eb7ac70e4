class FieldError(ValueError):
    def __init__(self, reason: str) -> None:
        super().__init__()
        self._reason = reason

    def __str__(self) -> str:
        return f"invalid field: {self._reason}"

    def __repr__(self) -> str:
        return f"FieldError({self._reason!r})"


class AmbientMismatchError(ValueError):
    def __init__(self, what: str, lhs: object, rhs: object) -> None:
        super().__init__()
        self._what = what
        self._lhs = lhs
        self._rhs = rhs

    def __str__(self) -> str:
        return f"{self._what} mismatch: {self._lhs} vs {self._rhs}"

    def __repr__(self) -> str:
        return f"AmbientMismatchError({self._what!r}, {self._lhs!r}, {self._rhs!r})"


class SingularMatrixError(ValueError):
    def __str__(self) -> str:
        return "matrix is singular"

    def __repr__(self) -> str:
        return "SingularMatrixError()"


class GuardExceededError(Exception):
    def __init__(self, what: str, requested: int, limit: int) -> None:
        super().__init__()
        self.what = what
        self.requested = requested
        self.limit = limit

    def __str__(self) -> str:
        return f"{self.what} of size {self.requested} exceeds the configured limit {self.limit}"

    def __repr__(self) -> str:
        return f"GuardExceededError({self.what!r}, {self.requested!r}, {self.limit!r})"


class EncoderError(ValueError):
    def __init__(self, reason: str) -> None:
        super().__init__()
        self._reason = reason

    def __str__(self) -> str:
        return f"invalid encoder: {self._reason}"

    def __repr__(self) -> str:
        return f"EncoderError({self._reason!r})"


class HypothesisError(ValueError):
    def __init__(self, op: str, reason: str) -> None:
        super().__init__()
        self._op = op
        self._reason = reason

    def __str__(self) -> str:
        return f"{self._op}: hypothesis not met: {self._reason}"

    def __repr__(self) -> str:
        return f"HypothesisError({self._op!r}, {self._reason!r})"


class InfeasibleCodeError(Exception):
    def __init__(self, d: int, size: int) -> None:
        super().__init__()
        self.d = d
        self.size = size

    def __str__(self) -> str:
        return f"no code of size {self.size} with minimum distance >= {self.d} exists"

    def __repr__(self) -> str:
        return f"InfeasibleCodeError({self.d!r}, {self.size!r})"


def check_guard(what: str, requested: int, limit: int) -> None:
    if requested > limit:
        raise GuardExceededError(what, requested, limit)


class TheoremViolationError(Exception):
    """An identity that holds for every valid input failed to hold. This
    always indicates a bug in subcast itself."""

    def __init__(self, what: str, detail: str) -> None:
        super().__init__()
        self.what = what
        self.detail = detail

    def __str__(self) -> str:
        return f"{self.what} violated: {self.detail}"

    def __repr__(self) -> str:
        return f"TheoremViolationError({self.what!r}, {self.detail!r})"
