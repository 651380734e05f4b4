"""Binary constant-weight codes from cosets of q-ary codes."""

from cwcodes.algebra import FieldGF2m, Poly2, bch_generator, cyclotomic_cosets
from cwcodes.codebook import (
    CodeSpec,
    ExplicitCode,
    LinearCode,
    bch_code,
    linear_from_generator,
    load_generator_matrix,
    min_weight_linear,
    puncture,
    reed_muller_1,
    save_generator_matrix,
    shorten,
)
from cwcodes.propagate import (
    BoundResult,
    CosetHistogram,
    SweepReport,
    avg_bound,
    avg_bound_extended,
    coset_histogram,
    extract_extended,
    extract_fixed,
    sweep,
    target_distance,
)
from cwcodes.verify import ClaimCheck, verify_claim
from cwcodes.words import Word

__version__ = "0.1.0"
