"""Exception hierarchy shared across the argcoach engine and service."""


class ArgcoachError(Exception):
    """Base class for all argcoach errors."""


# --- locale assets ---

class UnsupportedLocale(ArgcoachError):
    """The requested locale has no shipped or configured assets."""


class ParseError(ArgcoachError):
    """A document failed to parse; carries position info when known."""

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        super().__init__(message)
        self.line = line
        self.offset = offset


class DuplicateLocale(ArgcoachError):
    """Two templates in one document declare the same locale tag."""


class BadPattern(ArgcoachError):
    """A template pattern is missing or repeating one of its slots."""


# --- draft model ---

class EmptyElement(ArgcoachError):
    """Element text is blank after trimming whitespace."""


class BadPosition(ArgcoachError):
    """Ground position out of range, or a position given for a single-slot kind."""


class NotPresent(ArgcoachError):
    """The addressed element slot is empty."""


class MissingClaim(ArgcoachError):
    """The operation needs a claim and the draft has none."""


# --- wizard ---

class MandatoryElement(ArgcoachError):
    """Claim and at least one ground cannot be skipped."""


class SessionFinished(ArgcoachError):
    """An answer arrived after the wizard session completed."""


class InvalidSignal(ArgcoachError):
    """A wizard signal was sent while the cursor is on the wrong element."""


# --- checklist ---

class UnknownQuestion(ArgcoachError):
    """An answer references a question id outside the verification roll."""


# --- text generation ---

class EmptyGrounds(ArgcoachError):
    """Ground enumeration called with an empty list."""


# --- scheme registry ---

class DuplicateSchemeId(ArgcoachError):
    """A scheme-set document repeats a scheme id."""


class InvalidScheme(ArgcoachError):
    """A scheme violates a structural invariant (e.g. no premises)."""


class UnknownScheme(ArgcoachError):
    """No scheme with the given id exists in the set."""


# --- ratings ---

class BadStars(ArgcoachError):
    """Star value outside the 1..5 integer scale."""


class NotRatable(ArgcoachError):
    """The target argument is not published."""


class SelfRating(ArgcoachError):
    """Authors may not rate their own arguments."""


class UnknownArgument(ArgcoachError):
    """No argument with the given id exists."""


# --- repository / service ---

class UnknownCase(ArgcoachError):
    """No case with the given id exists."""


class UnknownDraft(ArgcoachError):
    """No draft with the given id exists."""


class UnknownSession(ArgcoachError):
    """No wizard session with the given id exists."""


class Forbidden(ArgcoachError):
    """The caller's role does not allow the operation."""


class InvalidCase(ArgcoachError):
    """Case fields violate an invariant (empty title or abstract)."""


class NotPublishable(ArgcoachError):
    """The draft fails the structural gate; lists the blocking issues."""

    def __init__(self, issues):
        super().__init__("draft is not publishable: " + ", ".join(i.describe() for i in issues))
        self.issues = list(issues)
