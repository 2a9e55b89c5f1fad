"""Configuration dataclasses for benchmark runs"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/bench/config.ipynb.

# %% auto #0
__all__ = ['DEFAULT_CONFIG_DIR', 'OUTPUT_FORMATS', 'PARTITION_KINDS', 'OutputConfig', 'BenchConfig']

# %% ../../nbs/bench/config.ipynb #26bac163
import json
import logging
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import List, Optional

from .registry import default_registry

logger = logging.getLogger(__name__)

# %% ../../nbs/bench/config.ipynb #7cbc4a85
# Default directory searched for settings.json
DEFAULT_CONFIG_DIR = Path("configs/parcolor")

OUTPUT_FORMATS = ("csv", "json")
PARTITION_KINDS = ("contiguous", "random")

# %% ../../nbs/bench/config.ipynb #31937acb
@dataclass
class OutputConfig:
    """Where and how benchmark results are written."""
    out_path: Optional[str] = None  # Results file; None writes a timestamped file under results_directory
    format: str = "csv"  # "csv" or "json"
    results_directory: str = "bench_results"  # Directory for generated result files
    coloring_path: Optional[str] = None  # Destination of `parcolor color` output

    def __post_init__(self):
        if self.format not in OUTPUT_FORMATS:
            raise ValueError(f"output format must be one of {OUTPUT_FORMATS}, got {self.format!r}")

# %% ../../nbs/bench/config.ipynb #ba9a0b50
@dataclass
class BenchConfig:
    """Configuration of one benchmark invocation.

    Thread counts far above the number of cores measure oversubscription rather than parallel speedup.
    """

    # Input (exactly one)
    input_path: Optional[str] = None  # SNAP-style edge-list file
    synthetic: Optional[str] = None  # Synthetic graph spec "kind:params[:seed]"

    # Algorithm and sweep
    algorithm: str = "fine"  # seq, barrier, coarse or fine
    threads: List[int] = field(default_factory=lambda: [1])  # Thread counts to sweep
    repetitions: int = 10  # Timed repetitions averaged per thread count
    verify: bool = False  # Check every coloring (untimed)
    baseline: bool = False  # Also time the sequential baseline and fill in speedups

    # Partitioning
    partition: str = "contiguous"  # "contiguous" id blocks or seeded "random" assignment
    seed: int = 0  # Seed for random partitioning

    # Internal subsystem configuration
    output: OutputConfig = field(default_factory=OutputConfig)  # Result file settings

    def __post_init__(self):
        if (self.input_path is None) == (self.synthetic is None):
            raise ValueError("exactly one of input_path and synthetic must be given")
        if default_registry.get_algorithm(self.algorithm) is None:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; expected one of {default_registry.names()}")
        if not self.threads or any(p < 1 for p in self.threads):
            raise ValueError(f"thread counts must be a nonempty list of positive integers, got {self.threads}")
        if self.repetitions < 1:
            raise ValueError(f"repetitions must be at least 1, got {self.repetitions}")
        if self.partition not in PARTITION_KINDS:
            raise ValueError(f"partition must be one of {PARTITION_KINDS}, got {self.partition!r}")

    @property
    def source_label(self) -> str:  # Short description of the input for result rows
        return Path(self.input_path).name if self.input_path else self.synthetic

    @classmethod
    def from_saved_config(
        cls,
        config_path: Optional[Path] = None,  # JSON settings file; defaults to DEFAULT_CONFIG_DIR/settings.json
        **overrides  # Override specific config values; None values are ignored
    ) -> "BenchConfig":  # Configured instance with saved values merged with defaults
        """Create config by loading saved settings and merging with defaults."""
        path = Path(config_path) if config_path else DEFAULT_CONFIG_DIR / "settings.json"
        saved = {}
        if path.exists():
            with open(path, "r", encoding="utf-8") as f:
                saved = json.load(f)
            logger.info("loaded settings from %s", path)
        elif config_path:
            raise FileNotFoundError(f"config file not found: {path}")

        output_fields = {f.name for f in fields(OutputConfig)}
        bench_fields = {f.name for f in fields(cls) if f.name != "output"}

        # Distribute saved values, then overrides, to the config they belong to
        output_kwargs, bench_kwargs = {}, {}
        for source in (saved.get("output", {}), saved, overrides):
            for key, value in source.items():
                if value is None:
                    continue
                if key == "output" and isinstance(value, OutputConfig):
                    output_kwargs = {f.name: getattr(value, f.name) for f in fields(OutputConfig)}
                elif key in output_fields:
                    output_kwargs[key] = value
                elif key in bench_fields:
                    bench_kwargs[key] = value

        # An input given as override replaces a saved input of the other kind
        for chosen, other in (("input_path", "synthetic"), ("synthetic", "input_path")):
            if overrides.get(chosen) is not None and overrides.get(other) is None:
                bench_kwargs.pop(other, None)
        return cls(**bench_kwargs, output=OutputConfig(**output_kwargs))
