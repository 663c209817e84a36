from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional


class RecordKind(Enum):
    """What a trace line describes."""
    START = "start"      # starting graph of a hill-climbing restart
    MOVE = "move"        # accepted hill-climbing move
    SAMPLE = "sample"    # emitted MCMC sample


@dataclass(frozen=True)
class TraceRecord:
    iteration: int
    log_score: float
    kind: RecordKind
    move: Optional[str] = None
    metadata: Dict[str, Any] = field(default_factory=dict)  # restart index, accepted flag, edge list

    def to_dict(self) -> Dict[str, Any]:
        row = {"iteration": self.iteration, "kind": self.kind.value, "log_score": self.log_score}
        if self.move is not None:
            row["move"] = self.move
        row.update(self.metadata)
        return row
