"""
Structural operations on elections: candidate restriction and voter selection
"""

from typing import Iterable, Sequence

import numpy as np

from ..models.election_models import Election, Vote
from ..models.response_models import ErrorCode
from ..utils.error_handling import ElectionError


def _with_positions(election: Election, positions: np.ndarray) -> Election:
    # seeds the cached_property so the matrix is not rebuilt from the ballots
    election.__dict__['positions'] = positions
    return election


def restrict(election: Election, keep: Iterable[int]) -> Election:
    """
    Restrict an election to a candidate subset, preserving each ballot's
    relative order. Fallback ballots may become empty.

    Raises:
        ElectionError: empty ``keep`` or candidates outside the election
    """
    keep = frozenset(keep)
    if not keep:
        raise ElectionError("Cannot restrict an election to no candidates")
    if not keep <= election.candidates:
        raise ElectionError(f"Candidates {sorted(keep - election.candidates)} are not in the election",
                            error_code=ErrorCode.UNKNOWN_CANDIDATE)
    if keep == election.candidates:
        return election

    columns = np.array(sorted(keep), dtype=np.int64)
    width = election.universe_size
    new_width = int(columns[-1]) + 1
    sub = election.positions[:, columns]
    order = np.argsort(sub, axis=1, kind='stable')
    ranks = np.argsort(order, axis=1, kind='stable')
    ranked = sub < width
    lengths = ranked.sum(axis=1)

    ordered = columns[order]
    votes = tuple(
        tuple(row[:length].tolist()) for row, length in zip(ordered, lengths)
    )

    positions = np.full((election.n, new_width), new_width, dtype=np.int64)
    positions[:, columns] = np.where(ranked, ranks, new_width)
    return _with_positions(Election(election.rule, keep, votes), positions)


def select_votes(election: Election, indices: Sequence[int]) -> Election:
    """The election with only the ballots at ``indices`` (in that order)"""
    indices = list(indices)
    votes = tuple(election.votes[i] for i in indices)
    selected = Election(election.rule, election.candidates, votes)
    return _with_positions(selected, election.positions[np.asarray(indices, dtype=np.intp)])


def drop_votes(election: Election, indices: Iterable[int]) -> Election:
    """The election without the ballots at ``indices``"""
    dropped = set(indices)
    return select_votes(election, [i for i in range(election.n) if i not in dropped])


def append_votes(election: Election, extra: Sequence[Vote]) -> Election:
    """The election with ``extra`` ballots appended"""
    if not extra:
        return election
    return Election(election.rule, election.candidates, election.votes + tuple(extra))
