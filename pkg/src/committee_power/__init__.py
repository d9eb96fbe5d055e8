"""A priori voting power in weighted committees.

Evaluates five anonymous voting rules (plurality, plurality runoff, Borda,
Copeland, Schulze) under integer player weights, measures each player's
influence as the probability that perturbing their ranking changes the
winner, and maps how the choice of rule shifts power across the weight
simplex.  Small committees are solved exactly by enumeration; large ones by
seeded Monte Carlo.
"""

from .backend import active_backend, available_backends
from .core import (BORDA, COPELAND, PLURALITY, PLURALITY_RUNOFF, RULES,
                   SCHULZE, Alternative, Committee, Profile, Ranking,
                   borda_scores, borda_winner, committees_equivalent,
                   copeland_scores, copeland_winner, pairwise_tally,
                   plurality_runoff_winner, plurality_scores,
                   plurality_winner, ranking_from_string, schulze_strengths,
                   schulze_winner, weighted_ballot_counts, winner,
                   winner_label)
from .errors import EnumerationCapError, ValidationError
from .exact import (ExactPowerReport, OutcomeTable, build_outcome_table,
                    delta_indicator, influence_exact, normalization_factor,
                    pbi_binary, swing_rankings, verify_pbi_coincidence)
from .files import load_committee, save_committee
from .mc import (McConfig, McPowerReport, SignificanceTest,
                 difference_significant, influence_mc, z_value)
from .simplex import (BestRuleMap, Comparison, PairwiseClassification,
                      SimplexGrid, best_rule_map, classify_pairwise,
                      scan_simplex, simplex_points)
from .ternary import render_ternary

__version__ = "0.1.0"

__all__ = [
    "Alternative", "BORDA", "BestRuleMap", "COPELAND", "Committee",
    "Comparison", "EnumerationCapError", "ExactPowerReport", "McConfig",
    "McPowerReport", "OutcomeTable", "PLURALITY", "PLURALITY_RUNOFF",
    "PairwiseClassification", "Profile", "RULES", "Ranking", "SCHULZE",
    "SignificanceTest", "SimplexGrid", "ValidationError", "active_backend",
    "available_backends", "best_rule_map", "borda_scores", "borda_winner",
    "build_outcome_table", "classify_pairwise", "committees_equivalent",
    "copeland_scores", "copeland_winner", "delta_indicator",
    "difference_significant", "influence_exact", "influence_mc",
    "load_committee", "normalization_factor", "pairwise_tally", "pbi_binary",
    "plurality_runoff_winner", "plurality_scores", "plurality_winner",
    "ranking_from_string", "render_ternary", "save_committee",
    "scan_simplex", "schulze_strengths", "schulze_winner", "simplex_points",
    "swing_rankings", "verify_pbi_coincidence", "weighted_ballot_counts",
    "winner", "winner_label", "z_value",
]
