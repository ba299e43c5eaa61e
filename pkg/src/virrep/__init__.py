"""Exact-arithmetic toolkit for lowest-weight representations of the
Virasoro and Heisenberg mode algebras.

Everything is computed over Q or Q(i): Gram matrices and unitarity verdicts
for Verma modules, the discrete series below c = 1, the deformed Virasoro
action on Fock space, truncated q-series characters with branching
multiplicities, and Sugawara central-charge regime scans.
"""

__version__ = "0.1.0"

from .characters import (
    CharacterFamily,
    NotDecomposableError,
    UnknownConstituentError,
    char_irreducible_c1,
    char_irreducible_generic,
    char_verma,
    extract_multiplicities,
    verify_su21_branching,
)
from .discrete import (
    DiscretePair,
    RegimeReport,
    classify_central_charge,
    discrete_c,
    discrete_h,
    enumerate_discrete_pairs,
    is_allowed_pair,
)
from .fock import (
    FourierPolynomial,
    OscillatorParams,
    apply_current,
    apply_virasoro,
    bmt_phase,
    fock_inner,
    oscillator_character,
    sl2_triple_check,
    smear_current,
    smear_virasoro,
    verify_virasoro_bracket,
    weyl_cocycle,
)
from .partitions import partition_count, partitions_of, symmetry_factor
from .qseries import QSeries, partition_generating, theta_series
from .scalars import GaussianRational, format_rational, parse_rational
from .verma import (
    GramMatrix,
    VermaModule,
    VermaParams,
    gram_matrix,
    irreducible_level_dims,
    is_positive_semidefinite,
    module_for,
    unitarity_scan,
    verma_apply,
)
from .wzw import (
    SimpleLieAlgebra,
    full_catalog,
    scan_noncompact,
    simple_lie_data,
    su,
    su_central_charge,
    wzw_central_charge,
)
