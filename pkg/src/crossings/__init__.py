"""Crossing statistics of uniformly random convex embeddings of graphs."""

__version__ = "0.1.0"

from .census import SubgraphCensus, census, census_by_enumeration, closed_form_census, count_config, count_r_matchings
from .coupling import (
    conditional_diff_variance,
    exact_size_bias_check,
    lemma_variance_bound,
    sample_coupled,
    sample_coupled_batch,
)
from .embedding import (
    Permutation,
    Pmf,
    count_crossings,
    count_crossings_batch,
    exact_distribution,
    is_crossing,
    sample_crossings,
)
from .graph import FamilyId, Graph, build_graph, family_graph, max_degree, parse_edge_list, serialize_edge_list
from .moments import (
    MomentReport,
    family_reference,
    kite_law,
    kite_limit_cdf,
    kolmogorov_bound,
    moments_from_census,
    pair_probability,
    verify_pair_probability,
)
from .stats import empirical_dk, standardize, std_normal_cdf
