"""Smoothness, Euler characteristic and rationality of pencils of fiberwise
quadrics in 5-fold scrolls over P^1, with a randomized geometric oracle."""

__version__ = "0.1.0"
