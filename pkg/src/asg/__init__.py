"""Apery sets, type, normality and the conductor of simplicial affine semigroups."""
from .apery import AperyTable, apery_set, gamma_bounds, maxima
from .conductor import (ConductorSet, conductor_fast_path, conductor_membership, conductor_min_gens,
                        f_vector, frobenius_number, normalization_generators)
from .cone import ConeInfo, analyze_cone, in_cone
from .errors import (InvalidTuple, MalformedInput, NotInSemigroup, NotNumerical, NotSimplicial,
                     OutsideCone, RankDeficient, ResourceLimit, SemigroupError, SingularBasis)
from .kernels import BACKEND
from .semigroup import Remainder, Semigroup
from .structure import Classification, classify, quasi_frobenius

__version__ = "0.1.0"
