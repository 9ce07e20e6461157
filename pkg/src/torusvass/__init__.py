"""Exact Vassiliev invariants of torus knots up to order six.

The pipeline: expand the torus-knot HOMFLY, Kauffman and Akutsu-Wadati
polynomials as truncated power series in x over exact rationals, solve exact
linear systems for the invariant tables, and verify the closed forms,
dependency relations and integrality properties that those tables satisfy.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import (AnsatzMismatch, CancellationFailure, DegreeExceeded,
                     DivisionByZeroSeries, Inconsistent, NotAKnot, RankDeficient,
                     SingularBracket, TorusVassError, TruncationUnderflow,
                     ZeroCasimirDivision)
from .series import Rational, TruncSeries, series_div, series_exp_linear, series_mul
from .linalg import ExactMatrix, ExactPoly, LinearSolution, interpolate_poly, solve_exact
from .knots import (UNKNOT, CanonicalTorusKnot, TorusKnot, canonical_knots,
                    canonicalize)
from .groups import (CasimirSet, Family, GroupInstance, GroupFactorVector,
                     casimirs, group_factor_vector, group_factors, product,
                     so_n, su2, su_n)
from .invariants import (akutsu_wadati_normalized, homfly_normalized,
                         kauffman_normalized, normalized_series, qpower,
                         unknot_factor, unnormalized_series)
from .tables import (InvariantTable, TREFOIL_NORMALIZERS, beta_from_alpha_tilde,
                     closed_form_alpha, closed_form_alpha_tilde, closed_form_beta)
from .extract import (AnsatzFit, ExtractionReport, assemble_system,
                      compare_fit_to_printed, default_instantiation_plan,
                      extract_alpha, extract_alpha_tilde, fit_ansatz)
from .analysis import (AuxiliaryScalars, DEPENDENCY_RELATIONS, ScanReport,
                       auxiliary_scalars, dependency_relations_check,
                       distinguishing_check, integrality_scan, lissajous_obstruction,
                       noncoprime_witnesses, proposition_modular_checks)

__all__ = [name for name in dir() if not name.startswith("_")]
