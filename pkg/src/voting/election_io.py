"""
Text formats for elections and control instances

Election block:
    rule=bucklin|fallback|plurality
    m n
    <n vote lines of 0-based candidate ids; fallback lines list the approved prefix>

Control instance: an election block followed by ``key=value`` lines
(control, tie, c, k), an optional ``pool_voters=<count>`` line with that many
vote lines, and an optional ``pool_candidates=<count>``. With spoiler
candidates the ids m..m+count-1 are the pool and every ballot ranks (or
approves from) the union.
"""

from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..models.control_models import ControlInstance, ControlType
from ..models.election_models import Election, Vote, VotingRule
from ..utils.error_handling import ControlLabException, FormatError
from .election_ops import restrict


class _Lines:
    """Cursor over text lines with 1-based line numbers for error messages"""

    def __init__(self, text: str):
        self.lines = text.split('\n')
        if self.lines and self.lines[-1] == '':
            self.lines.pop()
        self.index = 0

    @property
    def line_number(self) -> int:
        return self.index + 1

    def has_more(self) -> bool:
        return self.index < len(self.lines)

    def next(self, what: str) -> str:
        if not self.has_more():
            raise FormatError(f"unexpected end of input, expected {what}", self.line_number)
        line = self.lines[self.index].rstrip('\r')
        self.index += 1
        return line


def _parse_vote(line: str, line_number: int) -> Vote:
    try:
        return tuple(int(token) for token in line.split())
    except ValueError:
        raise FormatError(f"vote must list integer candidate ids: {line!r}", line_number)


def _parse_key(line: str, key: str, line_number: int) -> str:
    name, sep, value = line.partition('=')
    if not sep or name.strip() != key:
        raise FormatError(f"expected '{key}=...', got {line!r}", line_number)
    return value.strip()


def _read_election_block(cursor: _Lines) -> Tuple[VotingRule, int, List[Vote]]:
    rule_text = _parse_key(cursor.next("rule line"), "rule", cursor.index)
    try:
        rule = VotingRule(rule_text.lower())
    except ValueError:
        raise FormatError(f"unknown rule {rule_text!r}", cursor.index)

    header = cursor.next("'m n' line").split()
    if len(header) != 2:
        raise FormatError("expected 'm n'", cursor.index)
    try:
        m, n = int(header[0]), int(header[1])
    except ValueError:
        raise FormatError("m and n must be integers", cursor.index)
    if m < 1 or n < 0:
        raise FormatError(f"invalid sizes m={m} n={n}", cursor.index)

    votes = []
    for _ in range(n):
        line = cursor.next("vote line")
        votes.append(_parse_vote(line, cursor.index))
    return rule, m, votes


def _validated(build, line_number: Optional[int] = None):
    try:
        return build()
    except FormatError:
        raise
    except ControlLabException as e:
        raise FormatError(e.message, line_number, original_exception=e)


def parse_election(text: str) -> Election:
    """
    Parse the election text format.

    Raises:
        FormatError: malformed input (with the offending line number)
    """
    cursor = _Lines(text)
    rule, m, votes = _read_election_block(cursor)
    return _validated(lambda: Election.build(rule, range(m), votes))


def format_election(election: Election) -> str:
    """Render an election over candidates 0..m-1 in the text format"""
    lines = [f"rule={election.rule.value}", f"{election.m} {election.n}"]
    lines.extend(" ".join(str(c) for c in vote) for vote in election.votes)
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> ControlInstance:
    """
    Parse the control-instance text format.

    Raises:
        FormatError: malformed input or an instance violating its invariants
    """
    cursor = _Lines(text)
    rule, m, votes = _read_election_block(cursor)

    values: Dict[str, str] = {}
    pool_voters: Optional[List[Vote]] = None
    while cursor.has_more():
        line = cursor.next("key=value line")
        if not line.strip():
            continue
        key, sep, value = line.partition('=')
        key, value = key.strip(), value.strip()
        if not sep:
            raise FormatError(f"expected key=value, got {line!r}", cursor.index)
        if key == "pool_voters":
            try:
                count = int(value)
            except ValueError:
                raise FormatError("pool_voters needs a count", cursor.index)
            pool_voters = []
            for _ in range(count):
                vote_line = cursor.next("pool vote line")
                pool_voters.append(_parse_vote(vote_line, cursor.index))
        elif key in ("control", "tie", "c", "k", "pool_candidates"):
            values[key] = value
        else:
            raise FormatError(f"unknown key {key!r}", cursor.index)

    for required in ("control", "c"):
        if required not in values:
            raise FormatError(f"missing '{required}=' line")

    def build() -> ControlInstance:
        control = ControlType.parse(values["control"], values.get("tie"))
        distinguished = int(values["c"])
        k = int(values["k"]) if values.get("k", "-") not in ("-", "") else None
        spoilers = int(values.get("pool_candidates", 0))

        if spoilers:
            full = Election.build(rule, range(m + spoilers), votes)
            election = restrict(full, range(m))
            instance = ControlInstance(
                control, election, distinguished, k,
                pool_candidates=frozenset(range(m, m + spoilers)),
                extended_election=full,
            )
        else:
            election = Election.build(rule, range(m), votes)
            instance = ControlInstance(
                control, election, distinguished, k,
                pool_voters=tuple(pool_voters) if pool_voters is not None else None,
            )
        instance.validate()
        return instance

    try:
        return _validated(build)
    except ValueError as e:
        raise FormatError(f"invalid number: {e}")


def format_instance(instance: ControlInstance) -> str:
    """Render a control instance in the text format"""
    extended = instance.extended_election
    if extended is not None:
        m = instance.election.m
        body = [f"rule={extended.rule.value}", f"{m} {extended.n}"]
        body.extend(" ".join(str(c) for c in vote) for vote in extended.votes)
    else:
        body = format_election(instance.election).rstrip("\n").split("\n")

    control = instance.control
    body.append(f"control={control.base_name}")
    body.append(f"tie={control.tie_rule.value}")
    body.append(f"c={instance.distinguished}")
    body.append(f"k={instance.k if instance.k is not None else '-'}")
    if instance.pool_voters is not None:
        body.append(f"pool_voters={len(instance.pool_voters)}")
        body.extend(" ".join(str(c) for c in vote) for vote in instance.pool_voters)
    if instance.pool_candidates:
        body.append(f"pool_candidates={len(instance.pool_candidates)}")
    return "\n".join(body) + "\n"


def read_instance(path: Union[str, Path]) -> ControlInstance:
    return parse_instance(Path(path).read_text(encoding='utf-8'))


def write_instance(instance: ControlInstance, path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_instance(instance), encoding='utf-8')
