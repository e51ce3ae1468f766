"""hilbertcone: Hilbert's projective metric on cones and its applications."""

__version__ = "0.1.0"
