"""Exact enumeration and multiprecision asymptotics of unlabelled outerplanar graphs."""

from .asymptotics import (EdgeLaw, SingularData, Statistics, asymptotic_constants,
                          bipartite_growth, constants_report, eval_series,
                          eval_series_with_tail, outerplanar_edge_law, singular_data,
                          solve_rho_tau, statistics)
from .bipartite import BipartiteTables, bipartite_tables
from .composition import (CensusTables, build_tables, c_series, chat_series,
                          components_distribution_exact, counts, edge_counts,
                          expected_components_exact, g_series)
from .dissections import CisArgs, Faces, dissection_cis
from .errors import (ConsistencyError, OuterplanarError, SeriesDomainError, SolverError,
                     UsageError)
from .oracle import GraphCensus, census, is_outerplanar
from .series import EdgeSeries, PowerSeries, YPoly

__version__ = "0.1.0"

__all__ = [
    "EdgeLaw",
    "SingularData",
    "Statistics",
    "asymptotic_constants",
    "bipartite_growth",
    "constants_report",
    "eval_series",
    "eval_series_with_tail",
    "outerplanar_edge_law",
    "singular_data",
    "solve_rho_tau",
    "statistics",
    "BipartiteTables",
    "bipartite_tables",
    "CensusTables",
    "build_tables",
    "c_series",
    "chat_series",
    "components_distribution_exact",
    "counts",
    "edge_counts",
    "expected_components_exact",
    "g_series",
    "CisArgs",
    "Faces",
    "dissection_cis",
    "ConsistencyError",
    "OuterplanarError",
    "SeriesDomainError",
    "SolverError",
    "UsageError",
    "GraphCensus",
    "census",
    "is_outerplanar",
    "EdgeSeries",
    "PowerSeries",
    "YPoly",
]
