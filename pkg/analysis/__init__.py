"""Numerical core: Pauli algebra, the unitary manifold, optimizers, initialization and shot noise."""

__version__ = "0.1.0"
