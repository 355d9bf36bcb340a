"""!
\file instancefactory.py Build a monoid from its selection string
"""
from pylcm.action.amodel.automaton import AutomatonAction
from pylcm.action.amodel.odometer import Odometer
from pylcm.config import DEFAULT_SETTINGS, Settings
from pylcm.monoid.mmodel.freemonoid import FreeMonoid
from pylcm.monoid.mmodel.gridmonoid import GridMonoid
from pylcm.monoid.mmodel.zappaszep import ZappaSzepMonoid
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid


def make_monoid(
    text: str, settings: Settings = DEFAULT_SETTINGS
) -> AbstractLcmMonoid:
    """!
    \brief Instantiate "free:<k>", "grid:<k>", "odometer" or
    "automaton:<path>"

    \throws ValueError for an unknown selection string
    """
    kind, _, arg = text.strip().partition(":")
    if kind == "free":
        return FreeMonoid(_rank(arg, text), settings)
    if kind == "grid":
        return GridMonoid(_rank(arg, text), settings)
    if kind == "odometer" and not arg:
        return ZappaSzepMonoid(Odometer(), settings)
    if kind == "automaton" and arg:
        action = AutomatonAction.from_json(
            arg,
            depth=settings.automaton_depth,
            transport_bound=settings.transport_bound,
            ceiling=settings.enumeration_ceiling,
        )
        return ZappaSzepMonoid(action, settings)
    raise ValueError("unknown monoid " + repr(text))


def _rank(arg: str, text: str) -> int:
    """"""
    try:
        return int(arg)
    except ValueError:
        raise ValueError("monoid " + repr(text) + " needs an integer rank")
