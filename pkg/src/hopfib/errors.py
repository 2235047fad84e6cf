"""Exception types shared across the package."""


class HopfibError(Exception):
    """Base class for all package errors."""


class NoSuchRoot(HopfibError):
    pass


class DimensionMismatch(HopfibError):
    pass


class NotAssociative(HopfibError):
    def __init__(self, i, j, k):
        self.witness = (i, j, k)
        super().__init__(f"associativity fails on basis triple ({i}, {j}, {k})")


class UnitAxiomFails(HopfibError):
    def __init__(self, i, side):
        self.witness = i
        self.side = side
        super().__init__(f"unit axiom fails on basis element {i} ({side} side)")


class NotAnIdeal(HopfibError):
    pass


class ImproperIdeal(HopfibError):
    pass


class NotASubalgebra(HopfibError):
    pass


class NotACoideal(HopfibError):
    pass


class NotCentral(HopfibError):
    pass


class NoAntipode(HopfibError):
    pass


class NotABimodule(HopfibError):
    pass


class DifferentAlgebras(HopfibError):
    pass


class BudgetExceeded(HopfibError):
    """Randomized module splitting ran out of attempts.

    Usually indicates a splitting-field problem: some composition factor is
    irreducible over F_p but would split over an extension field.
    """


class BoundExceeded(HopfibError):
    pass


class InfiniteBasis(HopfibError):
    pass


class StructureCheckFailed(HopfibError):
    def __init__(self, report):
        self.report = report
        failed = [c.name for c in report.checks if not c.passed]
        super().__init__(f"structure axioms failed: {', '.join(failed)}")


class BadParameters(HopfibError):
    pass


class NotAPermutation(HopfibError):
    pass


class NotASubgroup(HopfibError):
    pass


class NotAHopfSubalgebra(HopfibError):
    pass
