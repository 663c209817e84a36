import json
import logging
from typing import List, TextIO

from bgescore.models.report import round_float
from bgescore.search.sinks.records import TraceRecord
from bgescore.utils.interfaces.isink import ISink

logger = logging.getLogger(__name__)


class JsonLinesSink(ISink):
    def __init__(self, stream: TextIO, batch_size: int = 1000):
        """
        Args:
            stream: Open text stream receiving one JSON object per line.
            batch_size: Number of records to buffer before flushing.
        """
        self.stream = stream
        self.batch_size = batch_size
        self._buffer: List[str] = []
        self.written = 0

    def write(self, record: TraceRecord) -> None:
        row = record.to_dict()
        row["log_score"] = round_float(row["log_score"])
        # sorted keys keep seeded traces byte-identical
        self._buffer.append(json.dumps(row, sort_keys=True))
        if len(self._buffer) >= self.batch_size:
            self.flush()

    def write_all(self, records) -> None:
        for record in records:
            self.write(record)
        self.flush()

    def flush(self) -> None:
        if not self._buffer:
            return

        try:
            logger.debug("[TraceSink] Flushing %d records...", len(self._buffer))
            self.stream.write("\n".join(self._buffer) + "\n")
            self.stream.flush()
            self.written += len(self._buffer)
        finally:
            self._buffer.clear()
