"""Exact combinatorics of cores, quotients, abaci, level-rank bijections,
and block partitions of specialized Ariki-Koike algebras, with a brute-force
verification CLI.
"""

from .partitions import (
    BetaSet,
    ChargedMultiPartition,
    ChargedPartition,
    Partition,
    e_core,
    e_quotient_charged,
    from_beta,
    hook_lengths,
    is_e_core,
    join_beta,
    join_charged,
    split_beta,
    split_charged,
    to_beta,
)
from .levelrank import AffinePerm, affine_perm, apply_affine, qr, qr_em, qr_em_inv, uglov
from .polynomials import IntPolynomial, cyclotomic, generic_degree, gl_order
from .hc_series import CuspidalPairGL, hc_pairs, hc_partition, hc_series_of
from .blocks import block_match_report, block_partition, residue_multiset, same_block

__version__ = "0.1.0"

__all__ = [
    "AffinePerm",
    "BetaSet",
    "ChargedMultiPartition",
    "ChargedPartition",
    "CuspidalPairGL",
    "IntPolynomial",
    "Partition",
    "affine_perm",
    "apply_affine",
    "block_match_report",
    "block_partition",
    "cyclotomic",
    "e_core",
    "e_quotient_charged",
    "from_beta",
    "generic_degree",
    "gl_order",
    "hc_pairs",
    "hc_partition",
    "hc_series_of",
    "hook_lengths",
    "is_e_core",
    "join_beta",
    "join_charged",
    "qr",
    "qr_em",
    "qr_em_inv",
    "residue_multiset",
    "same_block",
    "split_beta",
    "split_charged",
    "to_beta",
    "uglov",
]
