"""Catalan paths, Catalan--Spitzer permutations, Foata--Strehl trees and
the orbit series of the restricted Foata--Strehl action."""

__version__ = "0.1.0"
