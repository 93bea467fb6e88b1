"""Exact geometric predicates with symbolic perturbation."""
