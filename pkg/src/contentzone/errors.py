"""Exception types raised by the zoning engine.

Each class carries a stable ``code`` so callers (and the CLI) can report
failures without parsing messages.
"""


class ZoningError(Exception):
    code = "ZONING_ERROR"


class ConfigInvalid(ZoningError, ValueError):
    code = "CONFIG_INVALID"


class WindowSizeInvalid(ConfigInvalid):
    code = "WINDOW_SIZE_INVALID"


class LexiconError(ZoningError, ValueError):
    code = "LEXICON_INVALID"


class UnbalancedMarkers(ZoningError, ValueError):
    code = "UNBALANCED_MARKERS"


class UnknownActor(ZoningError, ValueError):
    code = "UNKNOWN_ACTOR"


class GoldEmpty(ZoningError, ValueError):
    code = "GOLD_EMPTY"


class DenominatorZero(ZoningError, ZeroDivisionError):
    code = "DENOMINATOR_ZERO"


class NoGoldAnaphors(ZoningError, ValueError):
    code = "NO_GOLD_ANAPHORS"
