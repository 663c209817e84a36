from abc import ABC, abstractmethod

from bgescore.search.sinks.records import TraceRecord


class ISink(ABC):
    @abstractmethod
    def write(self, record: TraceRecord) -> None:
        """
        Accepts a single record and adds it to the internal buffer.
        """
        pass

    @abstractmethod
    def flush(self) -> None:
        """
        Forces the buffer to be written to the destination.
        """
        pass
