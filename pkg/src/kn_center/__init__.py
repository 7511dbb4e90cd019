"""Exact arithmetic for the center of hyperelliptic current Lie algebras.

Subpackage map:
  cyclo, scalar, hseries, matrix  -- the exact arithmetic kernel
  recursions                      -- curve data and the P/Q reduction tables
  differentials                   -- reduction to the omega basis + oracle
  loop                            -- the centrally extended loop bracket
  genseries                       -- generating series, Bell polynomials
  automorphisms                   -- symmetry detection and classification
  reptheory                       -- characters, multiplicities, decomposition
  cli                             -- the kn-center command line tool
"""

from .cyclo import Cyclo, cyclotomic_poly
from .scalar import Scalar, parse_scalar, scalar_to_str
from .hseries import HalfSeries, series_frac_pow, series_integrate
from .matrix import Matrix
from .recursions import (
    CurveSpec,
    PTable,
    QTable,
    closed_form_P_oddcurve,
    compute_P,
    compute_Q,
    curve_from_dict,
)
from .differentials import (
    CenterVector,
    oracle_reduce,
    reduce_even,
    reduce_form,
    reduce_u,
    reduce_udt,
    reduce_uu,
)
from .loop import LoopElement, SimpleLieData, bracket, jacobi_defect, make_sl2
from .genseries import (
    OdeData,
    bell_partial,
    double_factorial_odd,
    faa_di_bruno_pow,
    gen_P,
    gen_Q,
    ode_residual,
    p_side_data,
    q_side_data,
)
from .automorphisms import (
    AutoParams,
    RingMonomial,
    SymmetryReport,
    apply_automorphism,
    check_dihedral,
    classify,
    detect_cyclic,
    detect_from_roots,
    homomorphism_certificate,
    roots_to_coeffs,
)
from .reptheory import (
    CharacterTable,
    DecompositionResult,
    GroupSpec,
    action_matrices,
    char_table,
    character_vector,
    closed_form_dihedral,
    compute_psi_sums,
    cyclic_eigendecomposition,
    cyclic_group,
    decompose_dihedral,
    dihedral_group,
    generic_dihedral_curve,
    multiplicities,
    phi_power_traces,
    rescaled_basis_check,
)

__version__ = "0.1.0"
