"""Genus-2 curves with (Z/3)^2 level structure and their (3,3)-isogeny descents."""
__version__ = "0.1.0"
