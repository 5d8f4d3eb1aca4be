"""
Payoff-relevance validators. Two signals (or states) are payoff
equivalent when d(A, ·) agrees at every aggregate A = 0, ..., N-1.
Witness games can produce such pairs at degenerate draws, so these
report instead of raising.
"""
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Tuple, Union
import logging

from .common import CommonValueGame
from .private import PrivateValueGame

@dataclass
class RelevanceReport():
    """ Pairs of labels whose payoff differences coincide """
    equivalent_pairs : List[Tuple[str, str]] = field(default_factory=list)

    @property
    def passed(self)->bool:
        return len(self.equivalent_pairs) == 0

    def __bool__(self)->bool:
        return self.passed

    def to_dict(self)->dict:
        return {'passed' : self.passed, 'equivalent_pairs' : [list(p) for p in self.equivalent_pairs]}

def validate_payoff_relevance(
        game : Union[PrivateValueGame, CommonValueGame],
        players : Optional[int] = None,
    )->RelevanceReport:
    """
    Distinct signals of a private-value game (distinct states of a
    common-value game) must differ in payoff at some aggregate.
    Common-value games need `players` to know the range of A.
    """
    if isinstance(game, CommonValueGame):
        if players is None:
            raise ValueError("players is required for a common-value game")
        labels = game.states.labels
    else:
        players = game.players
        labels = game.space.labels
    profiles = [
        tuple(game.payoff(A, i) for A in range(players))
        for i in range(len(labels))
    ]
    report = RelevanceReport()
    for a, b in combinations(range(len(labels)), 2):
        if profiles[a] == profiles[b]:
            report.equivalent_pairs.append((labels[a], labels[b]))
    if not report:
        logging.warning(
            f"Payoff relevance fails for {report.equivalent_pairs}: "
            "these pairs have identical payoff differences at every aggregate"
        )
    return report
