"""Tests for the LR-FHSS toolkit."""
