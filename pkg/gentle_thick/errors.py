"""Exception classes for gentle_thick errors"""


def is_sequence(arg):
    return (not hasattr(arg, "strip") and
            (hasattr(arg, "__getitem__") or
             hasattr(arg, "__iter__")))


class GentleThickException(Exception):
    pass


class AlgebraFormatError(GentleThickException):

    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        where = []
        if source:
            where.append(source)
        if line is not None:
            where.append("line {0}".format(line))
        if column is not None:
            where.append("column {0}".format(column))
        if where:
            message = "{0}: {1}".format(", ".join(where), message)
        super(AlgebraFormatError, self).__init__(message)


class ViolationError(GentleThickException):
    """Raised when a value is rejected because of a list of violations."""

    header = "invalid input"

    def __init__(self, violations, header=None):
        self.violations = list(violations)
        message = header or self.header
        if is_sequence(self.violations) and self.violations:
            message += ":\n" + "\n".join(
                "  - {0}".format(v) for v in self.violations)
        super(ViolationError, self).__init__(message)


class NotGentleError(ViolationError):
    header = "not gentle"


class InvalidStringError(ViolationError):
    header = "not a homotopy string"


class UngradedError(GentleThickException):

    def __init__(self, degree):
        self.degree = degree
        super(UngradedError, self).__init__(
            "ungraded cyclic word (degree {0})".format(degree))


class PreconditionError(GentleThickException):
    pass


class ChainMapError(GentleThickException):
    pass


class BoundExhausted(GentleThickException):

    def __init__(self, what, bound):
        self.what = what
        self.bound = bound
        super(BoundExhausted, self).__init__(
            "bound exhausted while {0} (bound {1})".format(what, bound))


class Undecided(GentleThickException):

    def __init__(self, dimension, bound):
        self.dimension = dimension
        self.bound = bound
        super(Undecided, self).__init__(
            "undecided: endomorphism space of dimension {0} exceeds the "
            "idempotent search bound {1}".format(dimension, bound))


class ModelInconsistency(GentleThickException):
    pass


class GentleThickConfigException(GentleThickException):
    pass
