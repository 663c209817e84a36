from pathlib import Path
from typing import Optional

from bgescore import create_context
from bgescore.models.dag import Dag
from bgescore.models.dataset import Dataset
from bgescore.models.prior import PriorConfig
from bgescore.models.report import ReportTable, RunReport, describe_prior
from bgescore.models.search_config import McmcConfig
from bgescore.scoring.cache import ScoreCache
from bgescore.search.mcmc import StructureSampler, edge_frequencies
from bgescore.search.sinks.trace_sink import JsonLinesSink
from bgescore.utils.interfaces.icommand import ICommand


class McmcCommand(ICommand):
    """Structure MCMC; reports posterior edge frequencies and writes the sample trace."""
    name = "mcmc"

    def __init__(self, dataset: Dataset, prior: PriorConfig, cfg: McmcConfig, echo: str,
                 trace_out: Optional[Path] = None, start: Optional[Dag] = None) -> None:
        self.dataset = dataset
        self.prior = prior
        self.cfg = cfg
        self.echo = echo
        self.trace_out = trace_out
        self.start = start

    def execute(self) -> RunReport:
        ctx = create_context(self.dataset, self.prior)
        sampler = StructureSampler(ctx, self.cfg, ScoreCache(), start=self.start)
        samples = sampler.run()

        if self.trace_out is not None:
            with open(self.trace_out, "w", encoding="utf-8") as stream:
                JsonLinesSink(stream).write_all(sample.to_record() for sample in samples)

        labels = self.dataset.names
        frequencies = edge_frequencies(samples, ctx.n)
        rows = [
            (labels[u], labels[v], float(frequencies[u, v]))
            for u in range(ctx.n) for v in range(ctx.n)
            if u != v and frequencies[u, v] > 0
        ]
        best = max(samples, key=lambda s: s.log_score) if samples else None

        return RunReport(
            command=self.echo,
            seed=self.cfg.seed,
            prior=describe_prior(self.prior),
            scores={f"{ctx.mode.value}_best_sample": best.log_score} if best else {},
            info={
                "samples": len(samples),
                "accepted": sampler.accepted,
                "acceptance_rate": sampler.acceptance_rate,
                "structure_prior": self.cfg.structure_prior.kind,
            },
            tables=(ReportTable.build("edge_frequencies", ("parent", "child", "frequency"), rows),),
        )
