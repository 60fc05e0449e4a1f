"""Exception hierarchy shared across the package."""

from __future__ import annotations


class SyngauntletError(Exception):
    """Base class for all errors raised by this package."""


# --- suite documents ---------------------------------------------------------

class MalformedDocument(SyngauntletError):
    """Suite document is not valid in the documented format."""


class MissingField(MalformedDocument):
    def __init__(self, field: str):
        super().__init__(f"missing required field: {field!r}")
        self.field = field


class TypeMismatch(MalformedDocument):
    def __init__(self, field: str, expected: str, got: object):
        super().__init__(f"field {field!r}: expected {expected}, got {type(got).__name__}")
        self.field = field


class EmptySentence(SyngauntletError):
    """All regions of a sentence are empty."""


# --- prediction DSL ----------------------------------------------------------

class ParseError(SyngauntletError):
    """Prediction source does not conform to the grammar."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


class MissingTarget(SyngauntletError):
    def __init__(self, condition: str, region: int):
        super().__init__(f"no surprisal entry for condition {condition!r}, region {region}")
        self.condition = condition
        self.region = region


# --- scoring -----------------------------------------------------------------

class EmptyText(SyngauntletError):
    """Text to score is empty after trimming."""


class EmptyCorpus(SyngauntletError):
    """Training corpus contains no sentences."""


class BadWeights(SyngauntletError):
    """Interpolation weights are invalid (wrong count, negative, or sum != 1)."""


class ScorerUnavailable(SyngauntletError):
    """Remote scorer could not be reached (retries exhausted)."""


class Timeout(ScorerUnavailable):
    """Remote scorer did not answer within the configured timeout."""


class ProtocolViolation(SyngauntletError):
    """Remote scorer answered with a response violating the wire contract."""


class TokenizationMismatch(SyngauntletError):
    """Token offsets do not cover the scored text."""


# --- alignment ---------------------------------------------------------------

class UnalignableToken(SyngauntletError):
    def __init__(self, token_text: str, char_start: int):
        super().__init__(f"token {token_text!r} at char {char_start} starts past all regions")
        self.token_text = token_text
        self.char_start = char_start


# --- engine ------------------------------------------------------------------

class DuplicateSuiteName(SyngauntletError):
    def __init__(self, name: str):
        super().__init__(f"duplicate suite name in run: {name!r}")
        self.name = name


class SuiteSetMismatch(SyngauntletError):
    """Reports to compare do not cover identical suite sets."""


class ScorerFailure(SyngauntletError):
    """A scorer error occurred while evaluating; carries item context."""

    def __init__(self, suite_name: str, item_index: int | None, cause: Exception):
        where = f"suite {suite_name!r}" + (f", item {item_index}" if item_index else "")
        super().__init__(f"scorer failed in {where}: {cause}")
        self.suite_name = suite_name
        self.item_index = item_index
        self.cause = cause


# --- suite templates ---------------------------------------------------------

class InconsistentLexicon(SyngauntletError):
    """A lexicon entry does not supply a surface form for every condition."""
