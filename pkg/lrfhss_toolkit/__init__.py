"""LR-FHSS Toolkit - air time, current consumption and battery lifetime models."""

__version__ = "0.1.0"
