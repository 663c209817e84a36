from typing import Optional, Sequence

from bgescore.business_logic.bias_study import BiasStudyResult, bias_study
from bgescore.models.prior import PriorConfig
from bgescore.models.report import ReportTable, RunReport, describe_prior
from bgescore.utils.interfaces.icommand import ICommand


class BiasStudyCommand(ICommand):
    """bge - hg95 local-score gap per parent count l across sample sizes."""
    name = "bias-study"

    def __init__(self, n: int, parents_max: int, sample_sizes: Sequence[int], seed: int, echo: str,
                 prior: Optional[PriorConfig] = None) -> None:
        self.n = n
        self.parents_max = parents_max
        self.sample_sizes = list(sample_sizes)
        self.seed = seed
        self.echo = echo
        self.prior = prior

    def execute(self) -> RunReport:
        result = bias_study(self.n, self.parents_max, self.sample_sizes, self.seed, self.prior)

        columns = ["l"] + [f"N={N}" for N in result.sample_sizes] + [
            "slope_ln_N", "gamma_ratio_slope", "scale_sensitivity", "expected_scale_sensitivity"]
        rows = [
            [l] + result.deltas[l] + [
                result.slopes[l],
                result.gamma_ratio_slopes[l],
                result.scale_sensitivity[l],
                BiasStudyResult.expected_scale_sensitivity(self.n, l),
            ]
            for l in sorted(result.deltas)
        ]
        return RunReport(
            command=self.echo,
            seed=self.seed,
            prior=describe_prior(self.prior) if self.prior is not None else {},
            info={"n": self.n, "parents_max": self.parents_max},
            tables=(ReportTable.build("bge_minus_hg95", columns, rows),),
        )
