"""Signed-zero float semantics, rewrite legality, and Beal-equation adjudication."""

__version__ = "0.1.0"
