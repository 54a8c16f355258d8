"""Cyclic branched cover homology and transient number bounds for knots."""

__version__ = "0.1.0"
