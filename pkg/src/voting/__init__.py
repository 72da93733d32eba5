"""
Election core: winner determination, restriction and the text formats
"""

from .winners import (
    majority_threshold, level_score, bucklin_winners, fallback_winners,
    plurality_winners, winners, is_unique_winner,
)
from .election_ops import restrict, select_votes, drop_votes, append_votes
from .election_io import (
    parse_election, format_election, parse_instance, format_instance,
    read_instance, write_instance,
)

__all__ = [
    'majority_threshold', 'level_score', 'bucklin_winners', 'fallback_winners',
    'plurality_winners', 'winners', 'is_unique_winner',
    'restrict', 'select_votes', 'drop_votes', 'append_votes',
    'parse_election', 'format_election', 'parse_instance', 'format_instance',
    'read_instance', 'write_instance',
]
