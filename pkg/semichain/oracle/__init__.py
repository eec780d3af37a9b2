"""
__init__.py file for oracle folder
"""

from .decompose import DecompositionRule, DecompositionStep, decompose_length
from .exact import (
    ChainVerification,
    longest_chain_exact,
    longest_inverse_chain_exact,
    verify_chain,
)
from .models import CertificateKind, ChainCertificate, SearchBudget

__all__ = [
    "CertificateKind",
    "ChainCertificate",
    "ChainVerification",
    "DecompositionRule",
    "DecompositionStep",
    "SearchBudget",
    "decompose_length",
    "longest_chain_exact",
    "longest_inverse_chain_exact",
    "verify_chain",
]
