"""Optimal L(d,1)-labelings of direct and Cartesian graph bundles of cycles over cycles."""

from .closed_form import (
    Case,
    Certificate,
    LabelScheme,
    NotAdmissibleError,
    Scheme,
    VerificationFailure,
    admissible_shifts,
    certify,
    is_certified_optimal,
    label_optimal,
    labels_from_scheme,
    mod_abs_diff_in_range,
    shift_from_certificate,
)
from .graph import (
    BundleSpec,
    Graph,
    Kind,
    build_bundle,
    cartesian_product,
    cycle,
    direct_product,
    distance_two_pairs,
    path,
    star,
)
from .labeling import (
    LabelCountMismatch,
    Labeling,
    ValidityReport,
    Violation,
    lemma1_lower_bound,
    naive_verify,
    verify_labeling,
)
from .solver import BudgetExceeded, SolveResult, is_labelable, lambda_exact

__version__ = "0.1.0"
