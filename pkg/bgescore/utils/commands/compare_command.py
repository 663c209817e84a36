from bgescore import create_context
from bgescore.business_logic.compare_states import compare_modes, pair_label
from bgescore.models.dag import Dag
from bgescore.models.dataset import Dataset
from bgescore.models.prior import PriorConfig, ScoreMode
from bgescore.models.report import ReportTable, RunReport, describe_prior, format_parents
from bgescore.scoring.cache import ScoreCache
from bgescore.utils.interfaces.icommand import ICommand


class CompareCommand(ICommand):
    """bge against the legacy hg95 and gh02 formulas, node by node."""
    name = "compare"

    def __init__(self, dataset: Dataset, dag: Dag, prior: PriorConfig, echo: str) -> None:
        self.dataset = dataset
        self.dag = dag
        self.prior = prior
        self.echo = echo

    def execute(self) -> RunReport:
        ctx = create_context(self.dataset, self.prior)
        comparison = compare_modes(self.dag, ctx, cache=ScoreCache())
        labels = self.dag.labels
        modes = comparison.modes
        pairs = list(comparison.differences[0]) if comparison.differences else []

        columns = ["node", "parents", "l"] + [m.value for m in modes] + pairs
        rows = []
        for node, parents in enumerate(self.dag.parents):
            rows.append(
                [labels[node], format_parents(parents, labels), len(parents)]
                + [comparison.local[node][m] for m in modes]
                + [comparison.differences[node][p] for p in pairs]
            )

        summary = ReportTable.build(
            "bge_minus_hg95_by_l",
            ("l", pair_label(ScoreMode.BGE, ScoreMode.HG95)),
            [(l, value) for l, value in comparison.by_parent_count.items()],
        )
        return RunReport(
            command=self.echo,
            prior=describe_prior(self.prior),
            scores={m.value: comparison.totals[m] for m in modes},
            tables=(ReportTable.build("local_scores", columns, rows), summary),
        )
