"""Exact q-Fock space, canonical bases, SL2 tilting characters and a Hecke-algebra oracle."""

__version__ = "0.1.0"
