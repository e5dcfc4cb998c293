"""Corpus-to-weights bridge for the lattice pipeline.

Reads a directory tree (plain text, PDF with caption fallback for
textless pages, standalone images), fits a pluggable topic model, and
writes the weights JSON the pipeline ingests.  The two packages share
nothing but that file format.
"""

from .captioning import BasicImageCaptioner, Captioner
from .emit import DEFAULT_TOP_K, emit_weights
from .errors import AdapterError, InputError, ModelError, PdfParseError
from .extract import CorpusManifest, FileRecord, extract_corpus
from .pdftext import PdfImage, PdfPage, read_pdf
from .topics import (
    MAX_WORDS_PER_TOPIC,
    MODELS,
    TfidfKMeansModel,
    TopicFit,
    TopicModel,
    make_model,
)

__version__ = "0.1.0"

__all__ = [
    "AdapterError",
    "BasicImageCaptioner",
    "Captioner",
    "CorpusManifest",
    "DEFAULT_TOP_K",
    "FileRecord",
    "InputError",
    "MAX_WORDS_PER_TOPIC",
    "MODELS",
    "ModelError",
    "PdfImage",
    "PdfPage",
    "PdfParseError",
    "TfidfKMeansModel",
    "TopicFit",
    "TopicModel",
    "emit_weights",
    "extract_corpus",
    "make_model",
    "read_pdf",
]
