"""Hypergeometric families: sigma/tau data, gauge factor and eigenpolynomials."""

from .base import FamilyKind, FamilySpec, GaugeSequence
from .builtin import FAMILIES, FamilyInfo, custom_family, make_family

__all__ = [
    "FAMILIES",
    "FamilyInfo",
    "FamilyKind",
    "FamilySpec",
    "GaugeSequence",
    "custom_family",
    "make_family",
]
