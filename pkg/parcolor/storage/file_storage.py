"""File-based storage for benchmark results and colorings"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/storage/file_storage.ipynb.

# %% auto #0
__all__ = ['ResultStorage']

# %% ../../nbs/storage/file_storage.ipynb #b7f04d12
import logging
from datetime import datetime
from pathlib import Path
from typing import List, Optional, Sequence, Union

from fastcore.basics import patch

from ..bench.config import OutputConfig
from ..bench.results import BenchResult, emit_results, parse_results
from ..core.coloring import Coloring, write_coloring
from ..core.graph import Graph

logger = logging.getLogger(__name__)

# %% ../../nbs/storage/file_storage.ipynb #5e2c91a7
class ResultStorage:
    """File-based storage for benchmark results."""

    def __init__(self,
                 config: OutputConfig  # Output configuration
                 ):
        """Initialize the storage."""
        self.config = config
        self._results_dir: Optional[Path] = None

    @property
    def results_directory(self) -> Path:  # Path to the results directory
        """Get the results directory, creating it if needed."""
        if self._results_dir is None:
            self._results_dir = Path(self.config.results_directory)
            self._results_dir.mkdir(exist_ok=True, parents=True)
        return self._results_dir

# %% ../../nbs/storage/file_storage.ipynb #b90f3873
@patch
def save(
    self: ResultStorage,
    results: Sequence[BenchResult]  # Results of one benchmark invocation
) -> Path:  # Path to the written file
    """Write results in the configured format to out_path, or to a generated file in the results directory."""
    data = emit_results(results, self.config.format)
    if self.config.out_path:
        path = Path(self.config.out_path)
        path.parent.mkdir(parents=True, exist_ok=True)
    else:
        path = self.results_directory / self._generate_filename(results[0].algorithm)
    path.write_bytes(data)
    logger.info("wrote %d results to %s", len(results), path)
    return path

# %% ../../nbs/storage/file_storage.ipynb #8edfc748
@patch
def load(
    self: ResultStorage,
    result_file: Union[str, Path]  # Path to a JSON result file
) -> Optional[List[BenchResult]]:  # Stored results, or None if the file cannot be read
    """Load results written in JSON format."""
    try:
        return parse_results(Path(result_file).read_bytes())
    except Exception as e:
        logger.error("error loading results from %s: %s", result_file, e)
        return None

# %% ../../nbs/storage/file_storage.ipynb #64e13bed
@patch
def list_results(
    self: ResultStorage,
    reverse: bool = True  # Newest first by default
) -> List[Path]:  # Result files in the results directory, sorted by name (which starts with a timestamp)
    return sorted(self.results_directory.glob(f"*.{self.config.format}"), reverse=reverse)

# %% ../../nbs/storage/file_storage.ipynb #74ba45aa
@patch
def save_coloring(
    self: ResultStorage,
    g: Graph,  # Colored graph
    coloring: Coloring,  # Coloring to export
    path: Optional[Union[str, Path]] = None  # Destination; defaults to config.coloring_path
) -> Path:  # Path to the written coloring file
    """Write a coloring as "vertex_id color" lines with original ids."""
    target = path or self.config.coloring_path
    if target is None:
        target = self.results_directory / f"{datetime.now().strftime('%Y%m%d_%H%M%S')}_coloring.txt"
    written = write_coloring(g, coloring, target)
    logger.info("wrote coloring of %d vertices to %s", g.n, written)
    return written

# %% ../../nbs/storage/file_storage.ipynb #ed3c85b1
@patch
def _generate_filename(
    self: ResultStorage,
    algorithm: str  # Algorithm of the first result
) -> str:  # Generated filename for the result file
    """Generate a filename for storing benchmark results."""
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    return f"{timestamp}_{algorithm}.{self.config.format}"
