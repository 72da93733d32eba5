"""
Control problems and their trivial-case conditions
"""

from .problems import (
    final_winners, tie_filtered_winners, apply_voter_partition,
    apply_candidate_partition, apply_action, goal_satisfied, empty_action,
)
from .conditions import (
    LevelMode, condition1, condition_levels, condition4_decide, destructive_majority_guard,
)

__all__ = [
    'final_winners', 'tie_filtered_winners', 'apply_voter_partition',
    'apply_candidate_partition', 'apply_action', 'goal_satisfied', 'empty_action',
    'LevelMode', 'condition1', 'condition_levels', 'condition4_decide',
    'destructive_majority_guard',
]
