"""Synchronizing words for weighted automata over arbitrary semirings."""

from .automaton import WeightedAutomaton, cerny_automaton, classify, eval_matrix, eval_weight
from .decide import (SearchBudget, Verdict, classical_dfa_sync, closure_decide,
                     locsync_via_boolean, mortality_via_sigma, shortest_word_oracle,
                     sigma_project, zero_corner_via_sigma)
from .matrix import (Matrix, identity, is_location_synchronizing, is_partial_01,
                     is_synchronizing, mat_mul, zero_matrix)
from .semiring import Semiring, is_zero, law_check, make_semiring

__all__ = [
    'Matrix', 'Semiring', 'SearchBudget', 'Verdict', 'WeightedAutomaton',
    'cerny_automaton', 'classical_dfa_sync', 'classify', 'closure_decide', 'eval_matrix',
    'eval_weight', 'identity', 'is_location_synchronizing', 'is_partial_01',
    'is_synchronizing', 'is_zero', 'law_check', 'locsync_via_boolean', 'make_semiring',
    'mat_mul', 'mortality_via_sigma', 'shortest_word_oracle', 'sigma_project',
    'zero_corner_via_sigma', 'zero_matrix',
]
