"""Exact symbolic verification engine, plus a numeric pointwise oracle, for
the exterior differential system governing weakly-Einstein anti-self-dual
Kahler surfaces."""

__all__ = [
    "algebra",
    "jets",
    "forms",
    "structure",
    "equations",
    "derive",
    "cases",
    "numeric",
    "cli",
]

__version__ = "1.0.0"
