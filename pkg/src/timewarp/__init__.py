"""Elastic distances, summative time-warp kernels and classification protocols."""

from .series import EMPTY, Sample, SymbolSequence, TimeSeries, add, lp_norm_dist, scale
from .distances import (
    BOUNDARY_ANCHORED,
    BOUNDARY_GAPS,
    CostParams,
    EditCostTriple,
    dtw,
    edit_distance_dp,
    erp,
    euclidean,
    levenshtein,
    levenshtein_costs,
    twed,
)
from .kernels import (
    KernelId,
    KernelParams,
    euclid_dot,
    kernel_value,
    path_sum_oracle,
    stwk_me,
    stwk_me_log,
    stwk_recursion,
    twip1,
    twip2,
    twip_distance,
)
from .gram import (
    GramMatrix,
    SpectrumReport,
    WitnessPair,
    build_gram,
    definiteness_report,
    eigen_symmetric,
    indefiniteness_witness_search,
    load_gram,
    quadratic_form,
    save_gram,
)
from .datasets import (
    LabeledDataset,
    UcrRecord,
    parse_ucr,
    parse_ucr_text,
    reference_sequence_sets,
    serialize_ucr,
    synth_gaussian_classes,
    two_spike_pair,
)
from .classify import (
    GridSpec,
    SvmModel,
    crossval_grid_search,
    evaluate,
    knn1_classify,
    loo_metaparam_search,
    pair_distance,
    rbf_kernel,
    run_knn_protocol,
    run_svm_protocol,
    smo_train_binary,
    svm_predict,
    svm_train,
)

__version__ = "0.1.0"
