"""
Reference Module - Independent high-accuracy oracle for the standard normal

This module provides the ground truth used by every comparison:
- Standard normal density
- Phi and the tail-stable Q-function
- erf and erfc
"""

from .base import DEFAULT_ACCURACY, ReferenceAccuracy
from .normal import erf_ref, erfc_ref, phi_ref, q_ref, std_normal_pdf

__all__ = [
    "DEFAULT_ACCURACY",
    "ReferenceAccuracy",
    "erf_ref",
    "erfc_ref",
    "phi_ref",
    "q_ref",
    "std_normal_pdf",
]
