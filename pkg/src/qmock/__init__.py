"""Exact q-series engine for mock theta function identities."""

__version__ = "0.1.0"
