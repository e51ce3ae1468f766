"""Euclidean Jordan algebras of the PSD and Lorentz cones."""
