"""
Test package for ckcas.
"""