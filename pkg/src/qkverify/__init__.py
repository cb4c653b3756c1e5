"""Exact-arithmetic verification of quaternionic Kaehler stabilizer
linear algebra.

Layers, bottom up:

  rational_linalg  sparse exact matrices, rank, RREF, subspaces
  exterior         forms, wedge / interior / star, endomorphisms
  quaternionic     I, J, K, the Kaehler forms, Phi, sp(n) (+) sp(1)
  engine           stabilizers, A^k / E^k, g^k / P^k, symbol maps
  rep              Weyl dimensions, decomposition tables, Casimir oracle
  hodge            the E^1 splitting and star-operator eigenvalues
  report / cli     suites, canonical JSON and Markdown reports
"""

from .rational_linalg import QQ, Matrix, LinearSubspace, rank, kernel
from .exterior import KForm, VectorValuedForm, Endomorphism
from .quaternionic import (
    build_triple, kaehler_forms, build_phi, explicit_structure_algebra,
    structure_constants,
)
from .engine import StructureForm, StructureContext, qk_context
from .rep import weyl_dim, sigma_dim, casimir_decompose, audit_bochner
from .hodge import split_E1, j_operator, verify_j_eigenvalues, invariant_subspace
from .report import SuiteConfig, run_suite, emit_report

__version__ = "0.1.0"
