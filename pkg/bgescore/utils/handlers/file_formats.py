import io
import json
import re
from pathlib import Path
from typing import Dict, List, Optional, Sequence, TextIO, Union

import numpy as np
import pandas as pd
import yaml

from bgescore.business_logic.graph import is_acyclic
from bgescore.models.dag import Dag
from bgescore.models.dataset import Dataset
from bgescore.utils.errors import EmptyData, NameMismatch, ParseError

Source = Union[str, Path, TextIO]

NODES_HEADER = "nodes:"


def _read_text(source: Source) -> str:
    if isinstance(source, (str, Path)):
        path = Path(source)
        if not path.exists():
            raise FileNotFoundError(f"Input file not found: {source}")
        return path.read_text(encoding="utf-8")
    return source.read()


class FileFormatsHandler:

    @staticmethod
    def load_dataset(source: Source) -> Dataset:
        """
        Parse comma-separated observations with a header row of variable names.

        Raises:
            ParseError: non-numeric or non-finite cell, ragged row, bad header.
                Rows are numbered from 1 at the first observation.
            EmptyData: no observation rows.
        """
        text = _read_text(source)
        try:
            frame = pd.read_csv(
                io.StringIO(text), header=None, dtype=str,
                keep_default_na=False, skip_blank_lines=True,
            )
        except pd.errors.EmptyDataError as e:
            raise EmptyData("Data file has no header and no observations") from e
        except pd.errors.ParserError as e:
            match = re.search(r"line (\d+)", str(e))
            # pandas counts the header as line 1
            row = int(match.group(1)) - 1 if match else None
            raise ParseError(f"Ragged row in data file: {e}", row=row) from e

        names = [str(name).strip() for name in frame.iloc[0].tolist()]
        for name in names:
            if not name or any(ch.isspace() for ch in name):
                raise ParseError(f"Invalid variable name '{name}' in header", row=0)
        if len(set(names)) != len(names):
            raise ParseError(f"Duplicate variable names in header: {names}", row=0)

        body = frame.iloc[1:]
        if body.empty:
            raise EmptyData("Data file has a header but no observations")

        values = np.empty(body.shape, dtype=float)
        for i, row in enumerate(body.itertuples(index=False), start=1):
            for j, cell in enumerate(row):
                if not isinstance(cell, str) or not cell.strip():
                    raise ParseError("Missing value", row=i, column=names[j])
                try:
                    value = float(cell)
                except ValueError:
                    raise ParseError(f"Non-numeric value '{cell}'", row=i, column=names[j]) from None
                if not np.isfinite(value):
                    raise ParseError(f"Non-finite value '{cell}'", row=i, column=names[j])
                values[i - 1, j] = value

        return Dataset(values=values, names=tuple(names))

    @staticmethod
    def dataset_to_csv(dataset: Dataset, target: Optional[Union[str, Path]] = None) -> str:
        frame = pd.DataFrame(dataset.values, columns=list(dataset.names))
        # 17 significant digits round-trip every double
        content = frame.to_csv(index=False, float_format="%.17g", lineterminator="\n")
        if target is not None:
            Path(target).write_text(content, encoding="utf-8")
        return content

    @staticmethod
    def parse_dag(source: Source, names: Optional[Sequence[str]] = None) -> Dag:
        """
        Edge-list DAG: one "parent child" pair per line, an optional
        "nodes: a,b,c" line declaring (isolated) nodes, '#' comments.

        With `names` (the data header) the DAG is laid over those variables
        and any other name raises NameMismatch; without it the node order is
        the declared nodes followed by new names in order of appearance.
        """
        text = _read_text(source)
        declared: List[str] = []
        edges: List[tuple] = []
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.lower().startswith(NODES_HEADER):
                listed = line[len(NODES_HEADER):]
                declared.extend(name.strip() for name in listed.split(",") if name.strip())
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise ParseError(f"Expected 'parent child', got '{line}'", row=line_no)
            if tokens[0] == tokens[1]:
                raise ParseError(f"Self-loop on '{tokens[0]}'", row=line_no)
            edges.append((line_no, tokens[0], tokens[1]))

        if names is not None:
            order = list(names)
            known = set(order)
            for name in declared + [n for _, p, c in edges for n in (p, c)]:
                if name not in known:
                    raise NameMismatch(name)
        else:
            order = []
            for name in declared + [n for _, p, c in edges for n in (p, c)]:
                if name not in order:
                    order.append(name)

        index: Dict[str, int] = {name: i for i, name in enumerate(order)}
        dag = Dag.from_edges(len(order), [(index[p], index[c]) for _, p, c in edges], order)
        if not is_acyclic(dag):
            raise ParseError("DAG file describes a directed cycle")
        return dag

    @staticmethod
    def serialize_dag(dag: Dag) -> str:
        labels = dag.labels
        lines = [f"{NODES_HEADER} {','.join(labels)}"]
        lines.extend(f"{labels[p]} {labels[c]}" for p, c in dag.edges())
        return "\n".join(lines) + "\n"

    @staticmethod
    def convert_string_to_json(content: str):
        """
        Parses string content (JSON, YAML) into a Python Dictionary/List.
        """
        content = content.strip()

        # Try JSON
        try:
            return json.loads(content)
        except (json.JSONDecodeError, ValueError):
            pass

        # Try YAML
        try:
            data = yaml.safe_load(content)
            if data is not None and not isinstance(data, str):
                return data
        except yaml.YAMLError:
            pass

        raise ValueError("Unable to parse content as JSON or YAML")
