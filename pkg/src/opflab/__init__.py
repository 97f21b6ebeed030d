"""Toy theory with modified measurement postulates, and the exact
representation theory used to show it violates purification and local tomography."""
from .branching import (BranchTerm, HolismCertificate, QuantumCase, branch_decompose,
                        branching_multiplicity, certify_holistic, enumerate_K_values)
from .characters import CharacterCache, character_table, kronecker, mn_character
from .consistency import ConstraintReport, verify_constraints
from .designs import NotPrime
from .partitions import (NonIntegerPadding, born_rep_partition, dim_Dj, pad, partitions,
                         su_dim, sym_dim)
from .purification import figure_data, is_reduced_state, project
from .toy import (DecompositionFailed, Ensemble, GlobalEffect, NotAnEffect, ToyEffect,
                  ToyMeasurement, ToyState, ZeroProbabilityBranch, canonical_measurement,
                  conditional_state, convex_decomposition, hyper_decohere,
                  induced_local_effect, opf_eval, reduced_state, star, validate_effect)

__version__ = "0.1.0"
