"""Invariants of Hecke / q-Brauer quotient inclusions at roots of unity."""

from .partitions import Partition
from .qarith import LabelError, RootOfUnityContext

__all__ = ["Partition", "RootOfUnityContext", "LabelError"]
__version__ = "0.1.0"
