"""Exception types shared across the package."""


class AspectMinerError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(AspectMinerError):
    """Malformed content in an input or resource file.

    Carries an optional source location so the CLI can point at the
    offending line.
    """

    def __init__(self, message, path=None, line=None):
        loc = ""
        if path is not None:
            loc = f"{path}: "
        if line is not None:
            loc = f"{loc}line {line}: "
        super().__init__(f"{loc}{message}")
        self.message = message
        self.path = path
        self.line = line
