"""Exact arithmetic for k-order linear recursions and their prime-side rings.

A core bracket [t_1,...,t_k] determines a monic polynomial, a linear
recursion, a companion matrix whose powers are signed Schur-hook values,
and for each prime p the finite ring F_p[x]/(C).  This package computes
recursion periods (over Z and mod p), realizes the companion/Schur
identities symbolically, and analyzes the semilocal ring structure:
idempotents, radical, unit group and orbit partition.
"""

__version__ = "0.1.0"

from .core import CorePolynomial, core
from .isobaric import (
    IsobaricPolynomial,
    enumerate_exponent_vectors,
    evaluate,
    formal_partial,
    gfp,
    glp,
    schur_via_jacobi_trudi,
    wip,
)
from .companion import (
    GF,
    QQ,
    ZZ,
    Domain,
    Matrix,
    companion_matrix,
    infinite_slice,
    inverse,
    negative_schur_identities_check,
    power,
    root_power_coordinates,
    trace_sequence,
)
from .recurrence import (
    PeriodVerdict,
    cyclotomic_core,
    cyclotomic_polynomial,
    generate,
    is_periodic_over_Z,
    period_mod_p_bruteforce,
    period_mod_p_matrix_order,
    period_scan,
)
from .fp_algebra import (
    FpFactorization,
    core_to_poly,
    derivative,
    different_element,
    discriminant,
    factor_mod_p,
    ramifies,
    resultant,
)
from .semilocal import (
    OrbitPartition,
    RingElement,
    SemilocalStructure,
    decompose,
    norm,
    orbit_partition,
    primitive_idempotents,
    rank,
    standard_matrix,
    trace,
    trace_orbit_sums,
    verify_period_law,
    verify_ramification_theorem,
    verify_unit_group_law,
)

__all__ = [
    "CorePolynomial",
    "core",
    "IsobaricPolynomial",
    "enumerate_exponent_vectors",
    "gfp",
    "glp",
    "wip",
    "evaluate",
    "formal_partial",
    "schur_via_jacobi_trudi",
    "Domain",
    "Matrix",
    "ZZ",
    "QQ",
    "GF",
    "companion_matrix",
    "inverse",
    "power",
    "infinite_slice",
    "trace_sequence",
    "root_power_coordinates",
    "negative_schur_identities_check",
    "PeriodVerdict",
    "generate",
    "is_periodic_over_Z",
    "period_mod_p_bruteforce",
    "period_mod_p_matrix_order",
    "period_scan",
    "cyclotomic_polynomial",
    "cyclotomic_core",
    "FpFactorization",
    "core_to_poly",
    "derivative",
    "resultant",
    "discriminant",
    "factor_mod_p",
    "ramifies",
    "different_element",
    "RingElement",
    "SemilocalStructure",
    "OrbitPartition",
    "standard_matrix",
    "trace",
    "norm",
    "rank",
    "decompose",
    "primitive_idempotents",
    "orbit_partition",
    "verify_unit_group_law",
    "verify_period_law",
    "verify_ramification_theorem",
    "trace_orbit_sums",
]
