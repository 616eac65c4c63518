"""
Utility functions for thermalNoise.
"""
