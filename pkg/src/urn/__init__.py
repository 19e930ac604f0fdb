"""Uncertainty-guided two-stage splicing localization for scientific images."""

__version__ = "0.1.0"
