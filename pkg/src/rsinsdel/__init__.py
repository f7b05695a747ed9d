"""Evaluation sets for 2-dimensional Reed-Solomon codes under the insertion/deletion metric."""

from .bounds import BoundReport, bound_report, capability, improved_bound, singleton_insdel, size_bound
from .constructions import (
    bertrand_prime,
    build_T,
    lemma4_set,
    recursive_union_bound,
    singer_set,
    theorem2_set,
    theorem3_set,
    verify_difference_multiplicity,
)
from .cyclotomy import CyclotomicTable, condition_i, cyclotomic_number, cyclotomic_table, verify_lemma8
from .errors import *  # noqa: F401,F403
from .evalset import DifferenceSetT, EvaluationSet
from .field import (
    Field,
    FieldElement,
    arith,
    build_field,
    build_field_q,
    discrete_log_small,
    subfield_generator,
    trace,
)
from .insdel import DistanceReport, code_min_distance_bruteforce, insdel_distance, lcs, rs2_min_distance
from .intersections import IntersectionProfile, intersection_size, max_intersection, ordered_lcs
from .ntheory import mult_order, ord_f_p

__version__ = "0.1.0"
