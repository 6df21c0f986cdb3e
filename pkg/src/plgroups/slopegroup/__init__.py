"""Slope groups, formal logarithms, characters and integer lattices."""
from .characters import (
    CharacterSpec,
    UnsupportedCharacter,
    char_exponents,
    char_sign,
    char_value,
    germ_sign,
    parse_character,
)
from .contfrac import INFINITY, gl2z_equivalent, minimal_period, periodic_expansion
from .lattice import IncompatibleLattices, Lattice, direct_sum, hnf, image
from .numtheory import (
    CyclicQuadratic,
    ExponentVector,
    MultGroupSpec,
    NotInGroup,
    RationalGens,
    lemma75_distinct,
    multiplicatively_independent,
    prime_exponents,
    to_exponents,
    units_trivial,
)

__all__ = [
    "CharacterSpec",
    "UnsupportedCharacter",
    "char_exponents",
    "char_sign",
    "char_value",
    "germ_sign",
    "parse_character",
    "INFINITY",
    "gl2z_equivalent",
    "minimal_period",
    "periodic_expansion",
    "IncompatibleLattices",
    "Lattice",
    "direct_sum",
    "hnf",
    "image",
    "CyclicQuadratic",
    "ExponentVector",
    "MultGroupSpec",
    "NotInGroup",
    "RationalGens",
    "lemma75_distinct",
    "multiplicatively_independent",
    "prime_exponents",
    "to_exponents",
    "units_trivial",
]
