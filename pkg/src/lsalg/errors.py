"""Exception hierarchy shared by all modules."""


class LSError(Exception):
    """Base class for every error raised by lsalg."""


class PosetError(LSError):
    """Malformed or invalid poset with bonds."""


class PosetSyntaxError(PosetError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class CapExceeded(LSError):
    """An enumeration grew past its configured cap."""


class InvalidPath(LSError):
    """A function on the poset is not an LS-path where one is required."""


class LeadingTermError(LSError):
    """A straightening generator does not lead with its non-standard monomial."""


class RelationsError(LSError):
    """Malformed or incomplete relation table."""
