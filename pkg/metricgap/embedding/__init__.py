"""Embeddings of graph metrics and the comparison with the classical gap."""

__all__ = [
    "bourgain_embed",
    "distortion",
    "distortion_summary",
    "DistortionReport",
    "EmbeddingResult",
    "minimum_ratio",
    "project_line",
    "projection_slack",
    "RatioRecord",
    "relate_to_R_report",
]

from .bourgain import (
    bourgain_embed,
    distortion,
    distortion_summary,
    DistortionReport,
    EmbeddingResult,
    project_line,
    projection_slack,
)
from .ratio import minimum_ratio, RatioRecord, relate_to_R_report
