"""Quantum homogenisation machines and constructor-based irreversibility metrics."""

__version__ = "0.1.0"
