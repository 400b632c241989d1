"""Exception types shared across the package."""


class GraphParseError(ValueError):
    """Malformed graph text. Carries the 1-based line (and optional column)."""

    def __init__(self, message, line=None, offset=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", offset {offset})" if offset is not None else ")")
        super().__init__(message + loc)
        self.line = line
        self.offset = offset


class BudgetExceeded(Exception):
    """A bounded search ran out of budget. The outcome is indeterminate,
    never a refutation."""

    indeterminate = True


class ColoringBudgetExceeded(BudgetExceeded):
    """Carries the best chromatic bounds proved before the budget ran out."""

    def __init__(self, lower, upper):
        super().__init__(f"coloring budget exceeded; {lower} <= chi <= {upper}")
        self.lower = lower
        self.upper = upper


class SearchBudgetExceeded(BudgetExceeded):
    def __init__(self, what="search"):
        super().__init__(f"{what} node budget exceeded; result indeterminate")


class ConstructionError(Exception):
    """A generator's input failed a required property; names the property."""

    def __init__(self, prop, message=""):
        super().__init__(f"construction requirement failed: {prop}" + (f" ({message})" if message else ""))
        self.prop = prop


class ConstructionRefuted(Exception):
    """All gadgets were attached and the chromatic number never rose.
    This is an experimental outcome; the attachment log is preserved."""

    def __init__(self, log):
        super().__init__(f"chromatic number did not increase after {len(log)} gadgets")
        self.log = log


class ThresholdTooLarge(Exception):
    """Exact evaluation would exceed the digit budget. Carries a structural
    description of the blocked subterm and a magnitude estimate."""

    def __init__(self, where, magnitude):
        super().__init__(f"exact value too large at {where}; roughly {magnitude}")
        self.where = where
        self.magnitude = magnitude
