"""Exception hierarchy. Each class carries the process exit code the CLI uses."""


class GearError(Exception):
    exit_code = 1


class InvalidSpec(GearError):
    exit_code = 2


class PinionLargerThanWheel(InvalidSpec):
    exit_code = 3

    def __init__(self, msg="pinion cannot have more teeth than wheel"):
        super().__init__(msg)


class TipGradientTooLarge(InvalidSpec):
    exit_code = 4


class ScanFailed(GearError):
    exit_code = 5


class NoConvergence(GearError):
    exit_code = 6


class ToleranceTooSmall(GearError):
    exit_code = 7


class NegativeClearanceRadius(GearError):
    exit_code = 8


class NonFiniteCoordinate(GearError):
    exit_code = 9


class InterferenceDetected(GearError):
    exit_code = 10
