"""Dist(C): the free doubly-infinitary distributive category over a finite base.

Objects are finite families of shapes with base objects at their positions;
the package computes composition, products, coproducts, exponentials, the
distributive law and canonical distributors, and checks their laws.
"""
from .core import (
    Category,
    ConeData,
    LawReport,
    PresentedCategory,
    count_mediators,
    mediators_unique,
    opposite,
    presented,
    validate_category,
    verify_universal,
)
from .dist import BOT, Dist, DistMorphism, DistObject
from .distlaw import (
    DistributorFamily,
    ProdOfSums,
    ProdOfSumsMorphism,
    ProdOfSumsObject,
    canonical_distributor,
    check_distributor_iso,
    distributor_inverse_finset,
    lambda_mor,
    lambda_obj,
)
from .errors import (
    CategoryError,
    EnumerationBudgetExceeded,
    MalformedInput,
    MissingStructure,
    NotALattice,
    ShapeRestriction,
    TypeMismatch,
    UnknownObject,
)
from .fam import Fam, FamMorphism, FamObject
from .models import (
    FiniteLattice,
    FinSet,
    dist_as_model,
    finset_model,
    is_completely_distributive_finite,
    lattice_model,
)

__version__ = "0.1.0"
