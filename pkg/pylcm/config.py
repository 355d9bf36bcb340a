"""!
\file config.py Settings shared by monoids, suites and the command line
"""
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Settings:
    """!
    \brief Knobs for enumeration sizes and bounded searches

    \param enumeration_ceiling largest number of items any enumeration
    may produce before ResourceLimitError is raised
    \param group_bound exponent range [-m, m] for the odometer, word length
    bound for automaton groups
    \param automaton_depth depth up to which automaton group elements are
    compared
    \param transport_bound word length of the group ball searched by
    automaton transport
    \param delta_depth default depth of Δ truncations
    \param seed seed of the pseudo random generator used by suites
    """

    enumeration_ceiling: int = 10 ** 6
    group_bound: int = 8
    automaton_depth: int = 6
    transport_bound: int = 4
    delta_depth: int = 4
    seed: int = 0

    def replace(self, **kwargs) -> "Settings":
        """"""
        return replace(self, **kwargs)


DEFAULT_SETTINGS = Settings()
