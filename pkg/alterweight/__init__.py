"""Autómatas alternantes con pesos sobre semianillos conmutativos"""

__version__ = "1.0.0"
