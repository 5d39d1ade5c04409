"""Exact two-point Sugawara operators, opers and Weyl modules for sl(2)."""

from .scalar import Scalar, parse_scalar
from .series import OneVarSeries, TwoVarFun

__version__ = "0.1.0"

__all__ = ["Scalar", "parse_scalar", "TwoVarFun", "OneVarSeries"]
