"""Exception hierarchy shared by every layer, including the compiled kernels."""


class ProjconfError(ValueError):
    """Base class for all geometric failures raised by this package."""


class ZeroVector(ProjconfError):
    pass


class SpaceMismatch(ProjconfError):
    pass


class DegenerateJoin(ProjconfError):
    """Two inputs of a join (or meet) coincide projectively.

    ``index`` is the 0-based vertex index of the failing join inside a
    polygon stage and ``stage`` the 0-based position in the word's
    application order; either may be None outside a polygon pipeline.
    """

    def __init__(self, message="inputs coincide projectively", index=None, stage=None):
        self.index = index
        self.stage = stage
        if index is not None:
            message = f"{message} (vertex {index}"
            message += f", stage {stage})" if stage is not None else ")"
        super().__init__(message)


class DegenerateConfiguration(ProjconfError):
    pass


class Underdetermined(ProjconfError):
    pass


class DegenerateConic(ProjconfError):
    pass


class NotOnConic(ProjconfError):
    pass


class TooFewVertices(ProjconfError):
    pass


class OddLength(ProjconfError):
    pass


class BadDiagonalIndex(ProjconfError):
    pass


class UnitNotCoprime(ProjconfError):
    pass
