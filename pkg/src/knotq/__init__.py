"""Q polynomial, bridge length and plane-curve distance tools for knot diagrams."""

__version__ = "0.1.0"
