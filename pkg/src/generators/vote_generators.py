"""
Vote generation under the Impartial Culture and Two Mainstreams models
"""

import hashlib
from itertools import permutations
from math import perm
from typing import Callable, Iterator, Optional, Tuple

import numpy as np

from ..models.election_models import Election, Vote, VotingRule
from ..models.experiment_models import DistModel

VoteSampler = Callable[[int, np.random.Generator], Vote]

# TM branch labels per voter
MAINSTREAM_1, MAINSTREAM_2, FRESH = 0, 1, 2


def derive_seed(master: int, *coords: object) -> int:
    """64-bit seed from the SHA-256 digest of the master seed and coordinates"""
    key = "|".join(str(part) for part in (master,) + coords)
    return int(hashlib.sha256(key.encode("utf-8")).hexdigest()[:16], 16)


def random_ranked_vote(m: int, rng: np.random.Generator) -> Vote:
    """Uniform ranking of candidates 0..m-1"""
    return tuple(rng.permutation(m).tolist())


def random_fallback_vote(m: int, rng: np.random.Generator) -> Vote:
    """
    Uniform ranking truncated after a uniform number of approvals in 0..m.

    The two draws are independent, so the approved prefix is not uniform
    over the fallback vote domain.
    """
    order = rng.permutation(m)
    approved = int(rng.integers(0, m + 1))
    return tuple(order[:approved].tolist())


def vote_sampler(rule: VotingRule) -> VoteSampler:
    return random_fallback_vote if rule.uses_approval else random_ranked_vote


def fallback_domain_size(m: int) -> int:
    """Number of distinct fallback votes over m candidates: sum of C(m, l) * l!"""
    return sum(perm(m, length) for length in range(m + 1))


def enumerate_fallback_votes(m: int) -> Iterator[Vote]:
    """Every fallback vote over candidates 0..m-1, shortest first"""
    for length in range(m + 1):
        yield from permutations(range(m), length)


def draw_votes(
    rule: VotingRule,
    dist: DistModel,
    m: int,
    count: int,
    rng: np.random.Generator,
) -> Tuple[Tuple[Vote, ...], Optional[np.ndarray]]:
    """
    ``count`` votes over candidates 0..m-1.

    Returns the votes and, for TM, each voter's branch (mainstream 1,
    mainstream 2 or a fresh draw; None for IC).
    """
    sample = vote_sampler(rule)
    if dist is DistModel.IC:
        return tuple(sample(m, rng) for _ in range(count)), None

    mainstreams = (sample(m, rng), sample(m, rng))
    branches = rng.integers(0, 3, size=count)
    votes = tuple(
        mainstreams[branch] if branch != FRESH else sample(m, rng)
        for branch in branches.tolist()
    )
    return votes, branches


def gen_election_with_branches(
    rule: VotingRule,
    dist: DistModel,
    m: int,
    n: int,
    rng: np.random.Generator,
) -> Tuple[Election, Optional[np.ndarray]]:
    """A random election together with the TM branch of every voter"""
    votes, branches = draw_votes(rule, dist, m, n, rng)
    return Election(rule, frozenset(range(m)), votes), branches


def gen_election(
    rule: VotingRule,
    dist: DistModel,
    m: int,
    n: int,
    rng: np.random.Generator,
) -> Election:
    """A random election with candidates 0..m-1 and n voters"""
    return gen_election_with_branches(rule, dist, m, n, rng)[0]
