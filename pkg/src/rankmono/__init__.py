"""Exact centrality measures and monotonicity audits under single-edge addition."""

__version__ = "0.1.0"
