"""Exception types shared across the package."""


class ModQuiverError(Exception):
    """Base class for every error raised by this package."""


class MultipleCyclesError(ModQuiverError):
    """The quiver has more than one unoriented cycle."""


class NotOneCycleError(ModQuiverError):
    """An operation requiring a one-cycle quiver was given something else."""


class NotVUniformError(ModQuiverError):
    """An operation requiring a vertex-uniform modulation was given a mixed one."""


class NotVUniformCError(NotVUniformError):
    """An operation requiring a complex vertex-uniform modulation got another ring."""


class LoopAtVertexError(ModQuiverError):
    """A conjugation flip was requested at a vertex that carries a loop."""


class InvalidModulationError(ModQuiverError):
    """The modulation violates the division-ring / bimodule catalog constraints."""


class UnsupportedBinomialError(ModQuiverError):
    """The relation set contains a binomial outside the supported fragment."""


class NonMonomialRelationsError(ModQuiverError):
    """A predicate expecting length-two monomial relations got something else."""


class EmptyQuiverError(ModQuiverError):
    """Classification treats the empty presentation as out of scope."""


class ParseError(ModQuiverError):
    """A positioned syntax or semantic error in the text input format."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message
