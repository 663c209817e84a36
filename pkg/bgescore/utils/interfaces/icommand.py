from abc import ABC, abstractmethod

from bgescore.models.report import RunReport


class ICommand(ABC):
    name: str

    @abstractmethod
    def execute(self) -> RunReport:
        pass
