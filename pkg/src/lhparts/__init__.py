"""Exact toolkit for lecture hall theorems on m-falling partitions."""

from . import classes, core, maps, series, verify
from .classes import ClassSpec
from .core import make_partition

__all__ = ["classes", "core", "maps", "series", "verify", "ClassSpec",
           "make_partition"]

__version__ = "0.1.0"
