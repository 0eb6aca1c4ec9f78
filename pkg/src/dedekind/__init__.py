"""Exact Dedekind sums S(m, n) = 12 s(m, n) and the arguments that carry their largest values."""

from dedekind.rational import Rational, parse_rational, format_rational, approx
from dedekind.sums import (
    SumQuery,
    ThreeTermDecomposition,
    sawtooth,
    normalize,
    dedekind_naive,
    dedekind_fast,
    dedekind_fast_scaled,
    closed_form_s1,
    closed_form_s2,
    mod_inverse,
    three_term_check,
)
from dedekind.extremal import (
    FareyWitness,
    Candidate,
    OrdinaryReport,
    VerifyReport,
    farey_approx,
    is_ordinary,
    candidate_set,
    candidate_count_bound,
    ordinary_bound,
    skn_bounds,
    nonordinary_deviation_bound,
    scan_top,
    verify_theorem1,
    verify_theorem2,
    theorem1_threshold,
    theorem2_thresholds,
    totient,
)

__all__ = [name for name in dir() if not name.startswith("_")]
