"""Density-thresholded concept lattices over document-topic weights.

Weighted document-topic matrices are row-normalized, binarized at a
density-driven threshold, mined per directory into iceberg concept
lattices, and aggregated into one directory-topic lattice exported as
JSON and DOT.
"""

from .aggregation import (
    DirectoryTopicContext,
    directory_label,
    directory_lattice,
    directory_topic_context,
    split_by_directory,
)
from .context import (
    ConceptSet,
    FormalConcept,
    FormalContext,
    cover_relation,
    enumerate_concepts,
    normalize_rate,
)
from .errors import DomainError, FatcatError, InputError
from .export import (
    LabeledLattice,
    TopicInfo,
    compress_ranges,
    concepts_to_dict,
    lattice_from_json,
    reduced_labels,
    to_dot,
    to_json,
)
from .iceberg import IcebergLattice, iceberg_concepts, is_frequent
from .ingest import parse_weights, parse_weights_csv, weights_from_dict
from .pipeline import PipelineConfig, PipelineResult, run_pipeline
from .synthetic import generate_synthetic, synthetic_plan
from .thresholding import (
    Document,
    ThresholdReport,
    WeightedDocTopicMatrix,
    WeightEntry,
    binarize,
    density,
    row_normalize,
    select_threshold,
)

__version__ = "0.1.0"

__all__ = [
    "ConceptSet",
    "DirectoryTopicContext",
    "Document",
    "DomainError",
    "FatcatError",
    "FormalConcept",
    "FormalContext",
    "IcebergLattice",
    "InputError",
    "LabeledLattice",
    "PipelineConfig",
    "PipelineResult",
    "ThresholdReport",
    "TopicInfo",
    "WeightEntry",
    "WeightedDocTopicMatrix",
    "binarize",
    "compress_ranges",
    "concepts_to_dict",
    "cover_relation",
    "density",
    "directory_label",
    "directory_lattice",
    "directory_topic_context",
    "enumerate_concepts",
    "generate_synthetic",
    "iceberg_concepts",
    "is_frequent",
    "lattice_from_json",
    "normalize_rate",
    "parse_weights",
    "parse_weights_csv",
    "reduced_labels",
    "row_normalize",
    "run_pipeline",
    "select_threshold",
    "split_by_directory",
    "synthetic_plan",
    "to_dot",
    "to_json",
    "weights_from_dict",
]
