"""Ontology-driven decision support toolkit for intermodal freight planning."""

__version__ = "0.1.0"
