"""Descending plane partitions and their lattice-path / LGV side."""

from asmdpp.dpp.core import DPP, DppStats, count_dpp, dpp_stats, dpp_weight, enumerate_dpp, is_dpp, z_dpp_bruteforce
from asmdpp.dpp.lgv import (
    d_entry, d_prime_last, d_prime_matrix, h_matrix, h_structured, lgv_matrix, m_dpp, m_dpp_refined,
    z_dpp_det, z_dpp_refined_det, z_dpp_refined_nu_det,
)
from asmdpp.dpp.paths import Path, PathFamily, dpp_to_paths, nonintersecting_families, paths_to_dpp, single_path_pf
from asmdpp.dpp.sandwich import asm_dpp_sandwich_check, gf_identity_check, quadratic_relation_check
