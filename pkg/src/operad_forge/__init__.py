"""Executable Day convolution, Kelly products and operads over finite ground categories."""

__version__ = "0.1.0"
