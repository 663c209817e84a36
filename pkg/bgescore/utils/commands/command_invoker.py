import logging
import time

from bgescore.models.report import RunReport
from bgescore.utils.interfaces.icommand import ICommand

logger = logging.getLogger(__name__)


class CommandInvoker:
    """Invoker that executes commands and times them."""

    def __init__(self, timing: bool = False) -> None:
        self.timing = timing

    def execute_command(self, command: ICommand) -> RunReport:
        """Execute a command, timing it."""
        started = time.perf_counter()
        report = command.execute()
        elapsed = time.perf_counter() - started
        logger.info("[CLI] %s finished in %.3f s", command.name, elapsed)

        if self.timing:
            report = report.model_copy(update={"elapsed_seconds": elapsed})
            report = RunReport.model_validate(report.model_dump())
        return report
