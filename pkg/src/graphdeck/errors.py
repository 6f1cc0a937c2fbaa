"""Exception types shared across the package."""


class GraphDeckError(Exception):
    """Base class for all graphdeck errors."""


class Graph6Error(GraphDeckError, ValueError):
    """Malformed graph6 text (bad header, payload byte, or trailing garbage)."""


class DeckFormatError(GraphDeckError, ValueError):
    """Malformed deck or count-table file."""


class IllegitimateDeckError(GraphDeckError):
    """A multiset that cannot be the deck of any graph (inexact division,
    negative maximal count, or no reconstruction found by a complete search)."""


class PreconditionError(GraphDeckError):
    """An operation was invoked outside its stated domain (girth too small,
    missing ambient vertex count, no connected card, ...)."""


class CapExceededError(GraphDeckError):
    """A configurable resource cap was exceeded."""
