"""Exception hierarchy shared by every module."""

from __future__ import annotations


class LeavittError(Exception):
    pass


class SourceVertex(LeavittError):
    def __init__(self, vertex: str) -> None:
        super().__init__(f"vertex {vertex!r} receives no edge (it is a source)")
        self.vertex = vertex


class GraphFormatError(LeavittError):
    pass


class Mismatch(LeavittError):
    pass


class NotComposable(LeavittError):
    pass


class NotACycle(LeavittError):
    pass


class MixedRings(LeavittError):
    pass


class SourceMismatch(LeavittError):
    pass


class NotDiagonal(LeavittError):
    pass


class NotANormalizer(LeavittError):
    pass


class InconsistentAction(LeavittError):
    pass


class OutsideDomain(LeavittError):
    pass


class MalformedCompression(LeavittError):
    pass


class NotZeroGraded(LeavittError):
    pass


class NotIsolated(LeavittError):
    pass


class NotEventuallyPeriodic(LeavittError):
    pass


class NotIdempotent(LeavittError):
    pass


class NoStabilization(LeavittError):
    def __init__(self, depth_cap: int, detail: str = "") -> None:
        msg = f"kappa did not stabilize within depth {depth_cap}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.depth_cap = depth_cap


class NotValidated(LeavittError):
    pass


class NotAHomomorphism(LeavittError):
    pass


class ParseError(LeavittError):
    def __init__(self, message: str, line: int = 1, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
