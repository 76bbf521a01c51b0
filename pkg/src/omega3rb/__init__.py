"""Exact verification of homogeneous Rota-Baxter operators on A_omega."""

__version__ = "0.1.0"
