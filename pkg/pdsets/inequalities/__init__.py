from .compound import (
    check_full_compound,
    check_log_submodularity,
    check_projection_bound,
    check_projection_submodularity,
    check_set_main,
    projection_nonsubmodularity_example,
    sumset_log_submodularity_probe,
    sumset_nonsubmodularity_example,
)
from .entropic import (
    check_compression_entropy,
    check_data_processing,
    check_entropy_counterexample_4sets,
    check_entropy_quadruple,
    check_entropy_submodularity,
    check_entropy_upper_bound,
    check_mutual_information_identity,
    check_pairwise_conditional,
    check_uniformizing,
)
from .rings import check_factorized, check_polynomial_compound, check_sum_of_squares
from .sumsets import (
    check_abelian_sumset,
    check_naive_pairwise,
    check_nonabelian,
    check_regular_abelian,
    check_ruzsa_quadruple,
    check_ruzsa_triple,
    conditioned_size,
    dihedral_example,
    gmr_leave_one_out,
    gmr_singletons,
    probe_weighted_nonabelian,
)

__all__ = (
    "check_abelian_sumset",
    "check_compression_entropy",
    "check_data_processing",
    "check_entropy_counterexample_4sets",
    "check_entropy_quadruple",
    "check_entropy_submodularity",
    "check_entropy_upper_bound",
    "check_factorized",
    "check_full_compound",
    "check_log_submodularity",
    "check_mutual_information_identity",
    "check_naive_pairwise",
    "check_nonabelian",
    "check_pairwise_conditional",
    "check_polynomial_compound",
    "check_projection_bound",
    "check_projection_submodularity",
    "check_regular_abelian",
    "check_ruzsa_quadruple",
    "check_ruzsa_triple",
    "check_set_main",
    "check_sum_of_squares",
    "check_uniformizing",
    "conditioned_size",
    "dihedral_example",
    "gmr_leave_one_out",
    "gmr_singletons",
    "probe_weighted_nonabelian",
    "projection_nonsubmodularity_example",
    "sumset_log_submodularity_probe",
    "sumset_nonsubmodularity_example",
)
