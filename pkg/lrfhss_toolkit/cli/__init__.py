"""Command-line interface for the LR-FHSS toolkit."""
