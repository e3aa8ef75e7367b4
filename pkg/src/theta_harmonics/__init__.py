"""Exact multiplicities in theta-group harmonics for two Vinberg pairs:
SL3 x SL3 x SL3 on C^3 x C^3 x C^3 (three qutrits) and SL9 on
wedge^3 C^9 (trivectors), each computed by independent routes that are
cross-checked against one another."""

from .characters import (
    EigenvalueMultiset,
    char_at_mu_closed_form,
    char_value,
    mu_eigenvalues,
    weight_diagram,
    weyl_dimension,
)
from .cyclotomic import BigRational, Cyclotomic, ZETA, ZETA3, zeta_pow
from .groups import e6_centralizer_group, e8_centralizer_group, eigenvalues
from .multiplicity import (
    E6Weight,
    MultiplicityReport,
    e6_averaging,
    e6_closed_form,
    e6_congruence,
    e8_closed_form,
    e8_direct_mu,
    e8_full_averaging,
    report,
)
from .oracle import (
    decompose,
    harmonic_series,
    invariant_series,
    symd_weights,
)
from .weights import HighestWeight, PositiveRoot, residue_partition, weyl_vector

__all__ = [
    "BigRational",
    "Cyclotomic",
    "E6Weight",
    "EigenvalueMultiset",
    "HighestWeight",
    "MultiplicityReport",
    "PositiveRoot",
    "ZETA",
    "ZETA3",
    "char_at_mu_closed_form",
    "char_value",
    "decompose",
    "e6_averaging",
    "e6_centralizer_group",
    "e6_closed_form",
    "e6_congruence",
    "e8_centralizer_group",
    "e8_closed_form",
    "e8_direct_mu",
    "e8_full_averaging",
    "eigenvalues",
    "harmonic_series",
    "invariant_series",
    "mu_eigenvalues",
    "report",
    "residue_partition",
    "symd_weights",
    "weight_diagram",
    "weyl_dimension",
    "weyl_vector",
    "zeta_pow",
]
