"""Inner Galois points of plane curves over finite fields, checked by exhaustive search."""

__version__ = "0.1.0"
