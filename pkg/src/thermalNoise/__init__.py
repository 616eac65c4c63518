"""
thermalNoise - a simulator for the qubit thermal noise (generalized amplitude damping) channel.
"""

__version__ = "0.1.0"
