"""Classification data for finite-dimensional W-algebra modules with integral central character."""

from .atlas import AtlasReport, CellType, SpringerBlock, analyze_family, build_report, cell_counts
from .errors import CellAtlasError
from .symbols import Family, Partition, Symbol
from .tl import TLPattern

__all__ = [
    "AtlasReport", "CellAtlasError", "CellType", "Family", "Partition", "SpringerBlock",
    "Symbol", "TLPattern", "analyze_family", "build_report", "cell_counts",
]
