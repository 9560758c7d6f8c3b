"""Exact combinatorics of parking functions with bounded displacement."""

from .core import (
    Outcome,
    Word,
    format_word,
    invert_permutation,
    is_parking_function,
    is_permutation,
    park,
    parse_word,
    sorted_rearrangement,
)
from .errors import (
    InvolutionFixedPoint,
    NotParkingFunction,
    NotTwoInterval,
    NotUnitInterval,
)
from .stats import StatRecord, inv_count, inv_from_spots, inv_pairs, maj, statistics
from .classify import (
    BlockStructure,
    RSMarkers,
    block_structure,
    fiber_preimage,
    is_block_shuffle,
    is_ell_interval,
    marker_sets,
    max_displacement,
    unit_projection,
    upf_from_surjection,
    upf_involution,
)
from .enumeration import (
    CensusRow,
    catalan,
    census,
    fubini,
    gen_increasing_pf,
    gen_ipf,
    gen_lehmer,
    gen_parking_functions,
    gen_surjections,
    gen_upf,
    ipf_count_by_fibers,
)
from .poly import QTPoly, gaussian_binomial, gaussian_multinomial, q_int
from .genfunc import (
    class_polynomial,
    lah_count,
    maj_variant,
    phi,
    phi_n_minus_two,
    phi_two,
    phi_upf,
    pref_choices,
    stirling2,
)
from .csp import (
    OrbitReport,
    csp_verify,
    cycle_power,
    cyclic_fixed,
    exact_evaluation,
    q_multinomial_at_root,
    sn_act,
)
from .foata import (
    EquidistReport,
    FoataTrace,
    equidist_check,
    foata,
    foata_inverse,
    foata_preserves_class,
    foata_trace,
    partial_foata,
)
from .cipher import (
    Cipher,
    avalos_bly,
    avalos_bly_inverse,
    bar_insertion_count,
    cipher_of,
    fib_poly,
    lehmer_to_perm,
    perm_to_lehmer,
    ufr_boolean_tables,
    underlying_code,
    upf_inv_count,
    upf_of_cipher,
)

__version__ = "1.0.0"
