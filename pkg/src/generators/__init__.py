"""
Random elections and control instances (Impartial Culture, Two Mainstreams)
"""

from .vote_generators import (
    MAINSTREAM_1, MAINSTREAM_2, FRESH,
    derive_seed, random_ranked_vote, random_fallback_vote, vote_sampler,
    fallback_domain_size, enumerate_fallback_votes, draw_votes,
    gen_election, gen_election_with_branches,
)
from .instance_generator import budget_for, gen_instance, InstanceGenerator

__all__ = [
    'MAINSTREAM_1', 'MAINSTREAM_2', 'FRESH',
    'derive_seed', 'random_ranked_vote', 'random_fallback_vote', 'vote_sampler',
    'fallback_domain_size', 'enumerate_fallback_votes', 'draw_votes',
    'gen_election', 'gen_election_with_branches',
    'budget_for', 'gen_instance', 'InstanceGenerator',
]
