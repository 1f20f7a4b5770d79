"""
Registry of named Cayley-Klein algebras.
"""

from .registry import AlgebraEntry, KINEMATICAL_ALIASES, catalog, lookup, resolve

__all__ = ['AlgebraEntry', 'KINEMATICAL_ALIASES', 'catalog', 'lookup', 'resolve']
