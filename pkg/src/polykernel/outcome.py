from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .structure import FiniteStructure


class Verdict(str, enum.Enum):
    REDUCED = "REDUCED"
    TRIVIAL_NO = "TRIVIAL_NO"
    TRIVIAL_YES = "TRIVIAL_YES"


@dataclass(frozen=True)
class KernelOutcome:
    """Result of a kernelization: an instance of the same problem plus bookkeeping.

    Trivial verdicts still carry a genuine instance whose answer is forced,
    so downstream consumers never need to special-case them.
    """

    structure: FiniteStructure
    k: int
    verdict: Verdict
    reason: str
    stats: dict[str, int] = field(default_factory=dict)
