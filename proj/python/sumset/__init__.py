"""Finite-group sum set and partial sum set toolkit.

Construct, classify, and exhaustively search for subsets of finite groups
whose product-representation counts are constant (sum sets) or two-valued
(partial sum sets), with machine-checkable certificates throughout.
"""

from ._sumset import *  # noqa: F401,F403

__version__ = "0.1.0"
