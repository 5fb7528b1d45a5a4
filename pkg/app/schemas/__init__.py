"""Schemas for complex files and command reports."""

from .complex_schema import ComplexFile, GeneratorEntry
from .report_schema import ErrorBody, Report

__all__ = [
    "ComplexFile",
    "ErrorBody",
    "GeneratorEntry",
    "Report",
]
