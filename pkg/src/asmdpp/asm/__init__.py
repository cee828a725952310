"""Alternating sign matrices and the six-vertex model side of the story."""

from asmdpp.asm.core import ASM, AsmStats, asm_stats, asm_weight, count_asm, enumerate_asm, is_asm, z_asm_bruteforce
from asmdpp.asm.lambdadet import lambda_det_expansion, lambda_det_tsystem
from asmdpp.asm.sixv import SixVConfig, asm_to_6v, enumerate_6v, ik_determinant, sixv_bruteforce
from asmdpp.asm.homog import (
    apm_factorization_check, g_matrix, homogeneous_6v, m_asm, m_asm_refined, z_asm_det, z_asm_refined_det,
    zasm_bridge_check,
)
