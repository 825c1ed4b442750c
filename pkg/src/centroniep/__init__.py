"""Constructive solutions of the nonnegative inverse eigenvalue problem for centrosymmetric matrices."""

from .errors import *  # noqa: F401,F403
from .spectra import SpectrumList, Partition, classify, is_obstructed, split_for_real_centro, split_suleimanova
from .centro import assemble, counteridentity, inverse_reduce, is_centrosymmetric, is_nonnegative, reduce, split
from .perturb import (
    brauer_update,
    companion_realize,
    perron_bump,
    perron_vector,
    rado_update,
    realize_with_diagonal,
    to_row_sum_form,
)
from .realize import (
    Realization,
    RealizationKind,
    auto_realize,
    check_obstruction,
    perfect_matrix,
    realize_4x4_diag_complex,
    realize_4x4_diag_real,
    realize_4x4_real,
    realize_centro_with_diagonal,
    realize_nonneg_real,
    realize_partitioned,
    realize_positive,
    realize_real_centro,
    realize_suleimanova,
)
from .verify import eigenvalues, match_spectra, verify_matrix, verify_realization

__version__ = "0.1.0"
