"""Face lattices, skeleton graphs and their vertex connectivity."""

__version__ = "0.1.0"
