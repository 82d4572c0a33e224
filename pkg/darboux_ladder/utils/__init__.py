"""Exceptions and exact-rational (de)serialization helpers."""
