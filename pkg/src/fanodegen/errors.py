"""Exception types raised across the package."""


class FanoDegenError(Exception):
    """Base class for all package errors."""


class RingMismatch(FanoDegenError, ValueError):
    pass


class UnknownVariable(FanoDegenError, ValueError):
    def __init__(self, name: str, offset: int | None = None):
        self.name = name
        self.offset = offset
        where = f" at byte {offset}" if offset is not None else ""
        super().__init__(f"unknown variable {name!r}{where}")


class PolynomialSyntaxError(FanoDegenError, ValueError):
    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} at byte {offset}")


class ExponentOverflow(FanoDegenError, OverflowError):
    pass


class BudgetExceeded(FanoDegenError, RuntimeError):
    pass


class NonGenericWeight(FanoDegenError, ValueError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"weight does not select a monomial initial term of {element}")


class NotSquareFreeMonomial(FanoDegenError, ValueError):
    pass


class EmptyInput(FanoDegenError, ValueError):
    pass


class LabelCollision(FanoDegenError, ValueError):
    pass


class VariableCountMismatch(FanoDegenError, ValueError):
    pass


class VertexCountMismatch(FanoDegenError, ValueError):
    pass


class UnknownName(FanoDegenError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown name"


class NotATriangulation(FanoDegenError, ValueError):
    pass


class DegeneratePointConfiguration(FanoDegenError, ValueError):
    pass


class InvalidType(FanoDegenError, ValueError):
    pass


class NotRollable(FanoDegenError, ValueError):
    def __init__(self, monomial: str, step: int | None = None):
        self.monomial = monomial
        self.step = step
        at = f" at roll {step}" if step is not None else ""
        super().__init__(f"monomial {monomial} has no top-row factor{at}")


class GenericityFailure(FanoDegenError, RuntimeError):
    pass


class OddB3(FanoDegenError, ValueError):
    pass


class WrongDimension(FanoDegenError, ValueError):
    pass


class PowerSeriesNonTermination(FanoDegenError, RuntimeError):
    def __init__(self, max_order: int):
        self.max_order = max_order
        super().__init__(f"lifting did not terminate within order {max_order}")


class ObstructedLifting(FanoDegenError, RuntimeError):
    def __init__(self, order: int):
        self.order = order
        super().__init__(f"first-order deformation is obstructed at order {order}")


class FileFormatError(FanoDegenError, ValueError):
    def __init__(self, path, line: int, message: str):
        self.path = str(path)
        self.line = line
        super().__init__(f"{path}:{line}: {message}")
