from pathlib import Path
from typing import Optional

from bgescore import create_context
from bgescore.models.dag import Dag
from bgescore.models.dataset import Dataset
from bgescore.models.prior import PriorConfig
from bgescore.models.report import ReportTable, RunReport, describe_prior
from bgescore.models.search_config import SearchConfig
from bgescore.scoring.cache import ScoreCache
from bgescore.search.hill_climb import hill_climb
from bgescore.search.sinks.trace_sink import JsonLinesSink
from bgescore.utils.handlers.file_formats import FileFormatsHandler
from bgescore.utils.interfaces.icommand import ICommand


def edge_table(dag: Dag) -> ReportTable:
    labels = dag.labels
    return ReportTable.build("dag", ("parent", "child"), [(labels[p], labels[c]) for p, c in dag.edges()])


class SearchCommand(ICommand):
    """Hill-climbing; the best DAG goes to the report and optionally to an edge-list file."""
    name = "search"

    def __init__(self, dataset: Dataset, prior: PriorConfig, cfg: SearchConfig, echo: str,
                 dag_out: Optional[Path] = None, trace_out: Optional[Path] = None,
                 start: Optional[Dag] = None) -> None:
        self.dataset = dataset
        self.prior = prior
        self.cfg = cfg
        self.echo = echo
        self.dag_out = dag_out
        self.trace_out = trace_out
        self.start = start

    def execute(self) -> RunReport:
        ctx = create_context(self.dataset, self.prior)
        cache = ScoreCache()
        start = self.start if self.start is not None else Dag.empty(ctx.n, self.dataset.names)
        result = hill_climb(ctx, self.cfg, cache, start=start)

        if self.dag_out is not None:
            Path(self.dag_out).write_text(FileFormatsHandler.serialize_dag(result.dag), encoding="utf-8")
        if self.trace_out is not None:
            with open(self.trace_out, "w", encoding="utf-8") as stream:
                JsonLinesSink(stream).write_all(result.trace)

        return RunReport(
            command=self.echo,
            seed=self.cfg.seed,
            prior=describe_prior(self.prior),
            scores={ctx.mode.value: result.log_score},
            info={
                "edges": result.dag.edge_count,
                "best_restart": result.restart,
                "moves": result.iterations,
                "distinct_families": len(cache),
            },
            tables=(edge_table(result.dag),),
        )
