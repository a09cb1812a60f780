"""Exact verification of twisted partial actions of finite-dimensional Hopf algebras."""
from .exactlin import GF, QQ, field_from_name
from .report import Report, VerificationError

__all__ = ["GF", "QQ", "field_from_name", "Report", "VerificationError"]
