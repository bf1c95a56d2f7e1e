"""Exact convolution algebra of equivariant sheaves on symmetric-group
double cosets, with two independent multiplication engines, the classical
Schur-algebra quotient and the concatenation operators on partition-tuple
bases."""

__version__ = "0.1.0"
