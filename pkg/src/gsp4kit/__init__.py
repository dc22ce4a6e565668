"""Exact arithmetic for p-adic families on GSp4 x GL2 x GL2.

The subpackages cover weight regions and their signs, the contributing
Frobenius eigenvalues at p, Euler factors, Dirichlet and weight characters,
and an operator calculus on truncated q-expansions.
"""

from .algebraic import AlgebraicNumber
from .atlas import (
    FamilyDescriptor,
    LocalComponentDescriptor,
    definiteness,
    expected_objects,
    global_sign,
    load_descriptor,
    reciprocity_edges,
    render_atlas,
)
from .characters import (
    ClassicalPoint,
    DirichletCharacter,
    RootOfUnity,
    WeightCharacter,
    is_crystalline,
    is_fully_ramified,
    make_classical_point,
    square_roots,
)
from .errors import ComputationError, GSp4KitError, ValidationError
from .euler import EulerInput, euler_factor, euler_factor_f_closed_form, zeta_constant
from .hecke import GL2HeckeParams, GSp4HeckeParams
from .panchishkin import ConstituentLabel, contributing_set, panchishkin_quotient, regenerate_table1
from .qexp import QExpansion, hecke_T, p_deplete, p_stabilize, specialize, theta_power, u_p
from .weights import Region, Weights, adjacency, classify, region_is_empty, sign_infinity

__version__ = "0.1.0"

__all__ = [
    "AlgebraicNumber",
    "ClassicalPoint",
    "ComputationError",
    "ConstituentLabel",
    "DirichletCharacter",
    "EulerInput",
    "FamilyDescriptor",
    "GL2HeckeParams",
    "GSp4HeckeParams",
    "GSp4KitError",
    "LocalComponentDescriptor",
    "QExpansion",
    "Region",
    "RootOfUnity",
    "ValidationError",
    "WeightCharacter",
    "Weights",
    "adjacency",
    "classify",
    "contributing_set",
    "definiteness",
    "euler_factor",
    "euler_factor_f_closed_form",
    "expected_objects",
    "global_sign",
    "hecke_T",
    "is_crystalline",
    "is_fully_ramified",
    "load_descriptor",
    "make_classical_point",
    "p_deplete",
    "p_stabilize",
    "panchishkin_quotient",
    "reciprocity_edges",
    "region_is_empty",
    "regenerate_table1",
    "render_atlas",
    "sign_infinity",
    "specialize",
    "square_roots",
    "theta_power",
    "u_p",
    "zeta_constant",
]
