"""Staged ontology construction: documents in, OWL modules out."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from ..docprep.document import SourceDocument, summarize_figures
from ..docprep.prepare import chunk as chunk_tokens
from ..docprep.prepare import detect_sentences, tokenize
from ..rdf.model import Graph
from ..rdf.store import merge_graphs
from .core import ReasoningCore
from .glossary import GlossaryTerm, extract_glossary, verify_consistency
from .keys import normalize_key
from .owl import IndividualSpec, emit_owl
from .relations import define_adhoc_relations
from .taxonomy import build_taxonomy


@dataclass
class PipelineConfig:
    base_iri: str = "http://example.org/generated/ontology"
    iterations: int = 3
    persistence_threshold: float = 2 / 3
    max_rounds: int = 5
    chunk_budget: int = 2048
    chunk_overlap: int = 128
    prefix_label: Optional[str] = None

    def __post_init__(self) -> None:
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if not 0 < self.persistence_threshold <= 1:
            raise ValueError("persistence threshold must be in (0, 1]")
        if self.max_rounds < 1:
            raise ValueError("max_rounds must be >= 1")
        if not 0 <= self.chunk_overlap < self.chunk_budget:
            raise ValueError("need 0 <= overlap < budget")

    def resolved_prefix(self) -> str:
        if self.prefix_label:
            return self.prefix_label
        tail = re.sub(r"[#/]+$", "", self.base_iri).rsplit("/", 1)[-1]
        label = re.sub(r"[^A-Za-z0-9]", "", tail).lower()
        return label or "onto"


@dataclass
class SectionReport:
    heading: str
    chunks: int = 0
    rounds_used: int = 0
    glossary_size: int = 0
    class_count: int = 0
    individual_count: int = 0
    taxonomy_edges: int = 0
    relation_count: int = 0
    dropped_by_persistence: List[str] = field(default_factory=list)
    dropped_by_consistency: List[str] = field(default_factory=list)
    broken_cycles: List[dict] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class PipelineReport:
    title: str
    sections: List[SectionReport] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "sections": [s.to_dict() for s in self.sections],
        }


@dataclass
class PipelineResult:
    section_graphs: List[Graph]
    merged: Graph
    report: PipelineReport


class PipelineError(RuntimeError):
    def __init__(self, stage: str, section: str, cause: Exception) -> None:
        super().__init__(f"stage {stage!r} failed on section {section!r}: {cause}")
        self.stage = stage
        self.section = section


def run_pipeline(
    document: SourceDocument,
    core: ReasoningCore,
    config: Optional[PipelineConfig] = None,
) -> PipelineResult:
    """Run the staged construction for every section and merge the modules.

    Per section: figure summaries are appended to the body, the text is
    split into sentences/tokens/chunks, the glossary is extracted with the
    persistence filter and confirmed against the section (repeating until
    the glossary reaches a fixpoint or ``max_rounds``), then taxonomy and
    ad-hoc relations are built and emitted as one OWL module. All modules
    share the configured base IRI so merging unifies recurring terms.
    """
    config = config or PipelineConfig()
    prefix = config.resolved_prefix()
    root_label = document.title
    root_key = normalize_key(root_label)

    section_graphs: List[Graph] = []
    report = PipelineReport(title=document.title)

    for index, section in enumerate(document.sections):
        section_report = SectionReport(heading=section.heading)
        report.sections.append(section_report)

        try:
            summaries = summarize_figures(section.figure_captions, core)
        except Exception as exc:
            raise PipelineError("summarize_figures", section.heading, exc) from exc
        body_ext = " ".join([section.body] + summaries).strip()

        sentences = detect_sentences(body_ext)
        tokens: List[str] = []
        for sentence in sentences:
            tokens.extend(tokenize(sentence))
            tokens.append(".")  # boundary marker so phrases never span sentences
        chunks = chunk_tokens(
            tokens, config.chunk_budget, config.chunk_overlap, section_index=index
        )
        section_report.chunks = len(chunks)

        if not chunks:
            section_report.warnings.append("section produced no tokens; empty module")
            section_graphs.append(
                emit_owl([], [], [], {}, config.base_iri, prefix)
            )
            continue

        glossary: List[GlossaryTerm] = []
        previous_keys: Optional[frozenset] = None
        rounds = 0
        while rounds < config.max_rounds:
            rounds += 1
            try:
                extracted, dropped_persistence = extract_glossary(
                    chunks,
                    document.title,
                    document.keywords,
                    core,
                    iterations=config.iterations,
                    threshold_fraction=config.persistence_threshold,
                )
                glossary, dropped_consistency = verify_consistency(
                    extracted, section, core
                )
            except Exception as exc:
                raise PipelineError("glossary", section.heading, exc) from exc
            section_report.dropped_by_persistence = dropped_persistence
            section_report.dropped_by_consistency = dropped_consistency
            keys = frozenset(t.key for t in glossary)
            if keys == previous_keys:
                break
            previous_keys = keys
        section_report.rounds_used = rounds
        section_report.glossary_size = len(glossary)

        if not glossary:
            section_report.warnings.append("empty glossary; empty module")
            section_graphs.append(
                emit_owl([], [], [], {}, config.base_iri, prefix)
            )
            continue

        try:
            taxonomy, broken = build_taxonomy(glossary, core, root_key)
        except Exception as exc:
            raise PipelineError("taxonomy", section.heading, exc) from exc
        section_report.taxonomy_edges = len(taxonomy)
        section_report.broken_cycles = [
            {"child": e.child, "parent": e.parent} for e in broken
        ]

        try:
            relations = define_adhoc_relations(glossary, taxonomy, sentences, core)
        except Exception as exc:
            raise PipelineError("relations", section.heading, exc) from exc
        section_report.relation_count = len(relations)

        class_terms = [t for t in glossary if not t.is_individual]
        class_keys = {t.key for t in class_terms} | {root_key}
        individuals: Dict[str, IndividualSpec] = {}
        for term in glossary:
            if not term.is_individual:
                continue
            type_key = normalize_key(term.instance_of) if term.instance_of else ""
            if type_key not in class_keys:
                type_key = root_key
            individuals[term.key] = IndividualSpec(
                label=term.label, types={type_key}
            )
        section_report.class_count = len(class_terms)
        section_report.individual_count = len(individuals)

        emission_classes = list(class_terms)
        if root_key not in {t.key for t in emission_classes}:
            emission_classes.append(GlossaryTerm(label=root_label, key=root_key))

        try:
            graph = emit_owl(
                emission_classes,
                taxonomy,
                relations,
                individuals,
                config.base_iri,
                prefix,
            )
        except Exception as exc:
            raise PipelineError("emit", section.heading, exc) from exc
        section_graphs.append(graph)

    merged = merge_graphs(section_graphs)
    return PipelineResult(section_graphs=section_graphs, merged=merged, report=report)
