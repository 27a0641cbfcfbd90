"""Texture descriptors (LBP, LDP) with an accelerated Kirsch response path."""

from .descriptors import (
    LDP_CODES,
    Descriptor,
    code_rank,
    code_unrank,
    extract,
    lbp_code,
    lbp_histogram,
    ldp_code,
    ldp_feature_vector,
    ldp_histogram,
)
from .imgio import (
    BorderPolicy,
    Checker,
    Constant,
    Gradient,
    GrayImage,
    PGMError,
    RandomSeeded,
    load_pgm,
    sample,
    save_pgm,
    synth_image,
)
from .kirsch import (
    ColumnTerms,
    KirschMask,
    OpCounter,
    ResponsePath,
    column_terms,
    response_field,
    responses_accelerated,
    responses_naive,
    standard_masks,
)
from .windowing import WindowGrid, make_grid, windowed_features

__version__ = "0.1.0"
