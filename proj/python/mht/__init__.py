"""Exact minimum-error characterizations and converse bounds for
finite-alphabet Bayesian M-ary hypothesis testing."""

from ._mht import *  # noqa: F401,F403
from ._mht import __doc__ as _doc

__doc__ = _doc
