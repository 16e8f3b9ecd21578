"""Finite and symbolic order-theoretic topology workbench."""

__version__ = "0.1.0"
