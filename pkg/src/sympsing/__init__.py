"""Exact-arithmetic verification workbench for a family of dihedral symplectic singularities."""
