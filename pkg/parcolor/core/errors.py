"""Exception types raised by graph loading, coloring and verification"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/errors.ipynb.

# %% auto #0
__all__ = ['ParcolorError', 'EdgeListParseError', 'IncompleteColoringError', 'PaletteExhaustedError',
           'VerificationError']

# %% ../../nbs/core/errors.ipynb #5b0e21c4
from typing import Any, Optional

# %% ../../nbs/core/errors.ipynb #a4f0c7d2
class ParcolorError(Exception):
    """Base class for library errors."""

# %% ../../nbs/core/errors.ipynb #1e9d3b77
class EdgeListParseError(ParcolorError, ValueError):
    """Malformed line in an edge-list stream."""

    def __init__(self,
                 line_no: int,  # 1-based line number of the offending line
                 message: str  # What was wrong with the line
                 ):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no

# %% ../../nbs/core/errors.ipynb #c83f0a19
class IncompleteColoringError(ParcolorError, ValueError):
    """A coloring was checked while some vertex was still unset."""

    def __init__(self,
                 vertex: int  # First vertex found without a color
                 ):
        super().__init__(f"vertex {vertex} has no color")
        self.vertex = vertex

# %% ../../nbs/core/errors.ipynb #77d2e6b0
class PaletteExhaustedError(ParcolorError, RuntimeError):
    """Every color of the Δ+1 palette was forbidden. Signals a bug in the caller."""

# %% ../../nbs/core/errors.ipynb #e3b9a812
class VerificationError(ParcolorError):
    """A finished coloring has monochromatic edges."""

    def __init__(self,
                 report: Any,  # ConflictReport listing the offending edges
                 context: Optional[str] = None  # Run description (algorithm, p, repetition)
                 ):
        where = f" ({context})" if context else ""
        super().__init__(f"{len(report.conflicts)} conflicting edges{where}")
        self.report = report
