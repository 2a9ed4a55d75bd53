"""Exception types raised by the analysis pipeline."""


class AuthorshipError(ValueError):
    """Base class for every error raised by this package."""


class MalformedName(AuthorshipError):
    pass


class ParseError(AuthorshipError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class DuplicatePaperId(AuthorshipError):
    def __init__(self, paper_id: str, line: int):
        super().__init__(f"line {line}: duplicate paper id {paper_id!r}")
        self.paper_id = paper_id
        self.line = line


class EmptyCorpus(AuthorshipError):
    pass


class DegenerateFit(AuthorshipError):
    """Raised when a regression has too few points or no spread in x."""


class UndefinedCorrelation(AuthorshipError):
    pass


class UndefinedMixing(AuthorshipError):
    pass
