"""Test package configuration; keeps this directory importable for shared helpers."""
