"""Staged ontology construction with pluggable reasoning cores."""

from .core import (
    CoreError,
    LlmCore,
    LlmCoreConfig,
    ReasoningCore,
    RelationProposal,
    RuleBasedCore,
    TermProposal,
)
from .glossary import (
    GlossaryExtractionError,
    GlossaryTerm,
    extract_glossary,
    persistence_threshold,
    verify_consistency,
)
from .keys import lower_camel, normalize_key, pascal_case
from .mapping import MappingReport, validate_against_domain
from .owl import IndividualSpec, TaxonomyCycleError, emit_owl
from .pipeline import (
    PipelineConfig,
    PipelineError,
    PipelineReport,
    PipelineResult,
    SectionReport,
    run_pipeline,
)
from .relations import AdHocRelation, define_adhoc_relations
from .taxonomy import TaxonomyEdge, build_taxonomy

__all__ = [
    "AdHocRelation",
    "CoreError",
    "GlossaryExtractionError",
    "GlossaryTerm",
    "IndividualSpec",
    "LlmCore",
    "LlmCoreConfig",
    "MappingReport",
    "PipelineConfig",
    "PipelineError",
    "PipelineReport",
    "PipelineResult",
    "ReasoningCore",
    "RelationProposal",
    "RuleBasedCore",
    "SectionReport",
    "TaxonomyCycleError",
    "TaxonomyEdge",
    "TermProposal",
    "build_taxonomy",
    "define_adhoc_relations",
    "emit_owl",
    "extract_glossary",
    "lower_camel",
    "normalize_key",
    "pascal_case",
    "persistence_threshold",
    "run_pipeline",
    "validate_against_domain",
    "verify_consistency",
]
