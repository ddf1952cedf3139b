"""Exact q-series toolkit for Eisenstein-type series, rank and crank moments."""

from .arith import Rational, bernoulli, bernoulli_polynomial
from .eisenstein import SeriesBank, crank_moment, d_f_rhs, eisenstein_G, g_general, g_series, rank_moment, series_family
from .partitions import Partition, crank, partition_trace, rank
from .qseries import PrecisionError, QSeries
from .relations import find_relations, monomial_basis
from .verify import CheckReport, run_check
from .wgraded import WSeries

__version__ = "0.1.0"

__all__ = [
    "CheckReport", "Partition", "PrecisionError", "QSeries", "Rational", "SeriesBank", "WSeries",
    "bernoulli", "bernoulli_polynomial", "crank", "crank_moment", "d_f_rhs", "eisenstein_G",
    "find_relations", "g_general", "g_series", "monomial_basis", "partition_trace", "rank",
    "rank_moment", "run_check", "series_family",
]
