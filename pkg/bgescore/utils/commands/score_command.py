from typing import Optional

from bgescore import create_context
from bgescore.models.dag import Dag
from bgescore.models.dataset import Dataset
from bgescore.models.prior import PriorConfig, ScoreMode
from bgescore.models.report import ReportTable, RunReport, describe_prior, format_parents
from bgescore.scoring.cache import ScoreCache
from bgescore.scoring.dag_score import dag_log_score, local_log_score
from bgescore.utils.interfaces.icommand import ICommand


class ScoreCommand(ICommand):
    """Total and per-node log scores of one DAG under one mode."""
    name = "score"

    def __init__(self, dataset: Dataset, dag: Dag, prior: PriorConfig, echo: str,
                 mode: Optional[ScoreMode] = None, naive: bool = False) -> None:
        self.dataset = dataset
        self.dag = dag
        self.prior = prior
        self.echo = echo
        self.mode = ScoreMode(mode or prior.mode)
        self.naive = naive

    def execute(self) -> RunReport:
        ctx = create_context(self.dataset, self.prior)
        cache = ScoreCache()
        labels = self.dag.labels
        total = dag_log_score(self.dag, ctx, cache, self.mode)

        rows = []
        for node, parents in enumerate(self.dag.parents):
            value = local_log_score(node, parents, ctx, self.mode, naive=self.naive).value
            rows.append((labels[node], format_parents(parents, labels), value))

        return RunReport(
            command=self.echo,
            prior=describe_prior(self.prior),
            scores={self.mode.value: total},
            info={"n": ctx.n, "N": ctx.N, "edges": self.dag.edge_count},
            tables=(ReportTable.build("local_scores", ("node", "parents", self.mode.value), rows),),
        )
