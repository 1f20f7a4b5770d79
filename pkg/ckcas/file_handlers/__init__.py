"""
File handling components for ckcas.
"""

from .output_writer import OutputWriter

__all__ = [
    'OutputWriter'
]
