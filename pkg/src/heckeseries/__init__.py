"""Exact computation of the rational Hecke generating series for Sp_n."""

__version__ = "0.1.0"
