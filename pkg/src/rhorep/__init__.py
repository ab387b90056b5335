"""rhorep: braid-group representations from the Steinberg module of restricted quantum sl(2) at roots of unity."""

__version__ = "0.1.0"
