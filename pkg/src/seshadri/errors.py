"""Exception hierarchy shared by all computation modules."""


class SeshadriError(ValueError):
    """Base class for every error raised by the toolkit."""


class DomainError(SeshadriError):
    """An operation was called outside of its validity range."""


class MixedRadicandError(SeshadriError):
    """Closed quadratic-surd arithmetic was attempted across two different radicands."""

    def __init__(self, left: int, right: int):
        super().__init__(f"cannot combine sqrt({left}) and sqrt({right}) exactly")
        self.left = left
        self.right = right


class ParseError(SeshadriError):
    """Input text does not match the expected grammar.

    ``column`` is the 0-based offset of the offending character in ``text``.
    """

    def __init__(self, message: str, text: str = "", column: int | None = None):
        self.message = message
        self.text = text
        self.column = column
        if column is None:
            super().__init__(message)
        else:
            super().__init__(f"{message} at column {column}: {text!r}")

    def annotated(self) -> str:
        """Render the message with a caret under the offending position."""
        if self.column is None or not self.text:
            return str(self)
        return f"{self.message}\n  {self.text}\n  {' ' * self.column}^"


class CatalogError(SeshadriError):
    """A bundle, catalog or certificate document is malformed."""
