"""!
\file propertyresult.py Tally of an exhaustive property check
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Union

MAX_COUNTEREXAMPLES = 5


@dataclass
class PropertyResult:
    """!
    \brief pass, fail and skip counts of one property with the first few
    counterexamples rendered as text
    """

    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexamples: List[str] = field(default_factory=list)

    def record(self, ok: bool, case: Union[str, Callable[[], str]] = ""):
        """!
        \brief count one case; case is only rendered when it failed
        """
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(case() if callable(case) else case)

    def tally(self, n: int):
        """!
        \brief count n passing cases at once
        """
        self.passed += n

    def skip(self, n: int = 1):
        """"""
        self.skipped += n

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "counterexamples": list(self.counterexamples),
        }
