"""Exact computations with Yokonuma-Hecke and Yokonuma-Schur algebras."""
