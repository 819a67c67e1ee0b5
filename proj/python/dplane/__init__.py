"""Digital plane topology: adjacency, curves, convexity, retractions, and
approximate fixed point analysis on finite subsets of the integer grid."""

from ._dplane import *  # noqa: F401,F403
