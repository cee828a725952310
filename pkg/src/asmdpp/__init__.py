"""Exact enumeration and determinant machinery for refined ASM and DPP counts."""

__version__ = "0.1.0"
