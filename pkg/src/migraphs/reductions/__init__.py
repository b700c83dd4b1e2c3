"""Builders for every reduction, each returning a ReductionBundle whose
realized intersection graph is cross-checked against rule-derived adjacency."""

from .bundle import ReductionBundle, make_bundle
from .domination import (reduce_domset_co3track, check_selection_properties,
                         domset_variant_checks, designated_mutations,
                         apply_mutation, mutation_detected)
from .distance_domination import (reduce_dist_domset_unit2track,
                                  reduce_dist_domset_co3interval)
from .perfect_code import reduce_perfectcode_unit2track
from .distance_perfect_code import reduce_dist_perfectcode_unit2track
from .clique_partition import reduce_cliquepartition_unit2interval
from .separation import (reduce_sep_balanced2track, reduce_sep_cobal3track,
                         derive_cutting_params)
from .irredundant import reduce_irredundant

__all__ = [
    "ReductionBundle", "make_bundle",
    "reduce_domset_co3track", "check_selection_properties",
    "domset_variant_checks", "designated_mutations", "apply_mutation",
    "mutation_detected",
    "reduce_dist_domset_unit2track", "reduce_dist_domset_co3interval",
    "reduce_perfectcode_unit2track", "reduce_dist_perfectcode_unit2track",
    "reduce_cliquepartition_unit2interval",
    "reduce_sep_balanced2track", "reduce_sep_cobal3track",
    "derive_cutting_params", "reduce_irredundant",
]
