"""
Run reports as line-oriented key: value text plus aligned tables.

    command: score --data chain.csv --dag chain.txt
    seed: 0
    prior.alpha_mu: 1
    score.bge: -431.120965201
    table: local_scores
      node  parents  bge
      a     -        -140.220017623
    end

Floats are kept to 12 significant digits, so parsing the text of a report
gives back an equal report.
"""
from typing import Dict, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, field_validator

from bgescore.utils.errors import ParseError

SIGNIFICANT_DIGITS = 12

Cell = Union[str, int, float]


def format_float(value: float) -> str:
    return f"{value:.{SIGNIFICANT_DIGITS}g}"


def round_float(value: float) -> float:
    return float(format_float(value))


def format_cell(value: Cell) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format_float(value)
    return str(value)


class ReportTable(BaseModel):
    name: str
    columns: Tuple[str, ...]
    rows: Tuple[Tuple[str, ...], ...] = ()

    model_config = ConfigDict(frozen=True)

    @field_validator("columns")
    @classmethod
    def validate_columns(cls, v: Tuple[str, ...]) -> Tuple[str, ...]:
        if not v:
            raise ValueError("Report table needs at least one column")
        return v

    @classmethod
    def build(cls, name: str, columns: Sequence[str], rows: Sequence[Sequence[Cell]]) -> "ReportTable":
        return cls(
            name=name,
            columns=tuple(columns),
            rows=tuple(tuple(format_cell(cell) for cell in row) for row in rows),
        )

    def column(self, name: str) -> List[str]:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]

    def to_lines(self) -> List[str]:
        widths = [len(c) for c in self.columns]
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError(f"Row {row} does not match columns {self.columns}")
            widths = [max(w, len(cell)) for w, cell in zip(widths, row)]

        def render(cells: Sequence[str]) -> str:
            return "  " + "  ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip()

        lines = [f"table: {self.name}", render(self.columns)]
        lines.extend(render(row) for row in self.rows)
        lines.append("end")
        return lines


class RunReport(BaseModel):
    command: str
    seed: Optional[int] = None
    prior: Dict[str, str] = {}
    scores: Dict[str, float] = {}
    info: Dict[str, str] = {}
    tables: Tuple[ReportTable, ...] = ()
    elapsed_seconds: Optional[float] = None

    model_config = ConfigDict(frozen=True)

    @field_validator("scores", mode="after")
    @classmethod
    def round_scores(cls, v: Dict[str, float]) -> Dict[str, float]:
        return {key: round_float(value) for key, value in v.items()}

    @field_validator("elapsed_seconds", mode="after")
    @classmethod
    def round_elapsed(cls, v: Optional[float]) -> Optional[float]:
        return None if v is None else round_float(v)

    @field_validator("prior", "info", mode="before")
    @classmethod
    def format_values(cls, v):
        return {key: format_cell(value) for key, value in (v or {}).items()}

    def table(self, name: str) -> ReportTable:
        for table in self.tables:
            if table.name == name:
                return table
        raise KeyError(f"No table named '{name}' in report")

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        lines.extend(f"prior.{key}: {value}" for key, value in self.prior.items())
        lines.extend(f"score.{key}: {format_float(value)}" for key, value in self.scores.items())
        lines.extend(f"info.{key}: {value}" for key, value in self.info.items())
        if self.elapsed_seconds is not None:
            lines.append(f"elapsed_seconds: {format_float(self.elapsed_seconds)}")
        for table in self.tables:
            lines.extend(table.to_lines())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RunReport":
        fields: Dict[str, object] = {"prior": {}, "scores": {}, "info": {}}
        tables = []
        lines = text.splitlines()
        i = 0
        while i < len(lines):
            line = lines[i]
            i += 1
            if not line.strip():
                continue
            key, sep, value = line.partition(": ")
            if not sep:
                raise ParseError(f"Malformed report line: '{line}'", row=i)

            if key == "table":
                if i >= len(lines):
                    raise ParseError(f"Table '{value}' has no header", row=i)
                columns = tuple(lines[i].split())
                i += 1
                rows = []
                while i < len(lines) and lines[i] != "end":
                    rows.append(tuple(lines[i].split()))
                    i += 1
                if i >= len(lines):
                    raise ParseError(f"Table '{value}' is not terminated by 'end'", row=i)
                i += 1
                tables.append(ReportTable(name=value, columns=columns, rows=tuple(rows)))
            elif key == "command":
                fields["command"] = value
            elif key == "seed":
                fields["seed"] = int(value)
            elif key == "elapsed_seconds":
                fields["elapsed_seconds"] = float(value)
            elif key.startswith("prior."):
                fields["prior"][key[len("prior."):]] = value
            elif key.startswith("score."):
                fields["scores"][key[len("score."):]] = float(value)
            elif key.startswith("info."):
                fields["info"][key[len("info."):]] = value
            else:
                raise ParseError(f"Unknown report key '{key}'", row=i)

        if "command" not in fields:
            raise ParseError("Report has no 'command' line")
        return cls(tables=tuple(tables), **fields)


def describe_prior(prior) -> Dict[str, Cell]:
    """Report echo of a PriorConfig; T is echoed as its scale when it is t * I."""
    t = prior.t_scale()
    return {
        "alpha_mu": prior.alpha_mu,
        "alpha_w": prior.alpha_w,
        "t_scale": t if t is not None else "matrix",
        "nu": ",".join(format_float(v) for v in prior.nu),
        "mode": prior.mode.value,
        "rank_one_coefficient_uses": prior.rank_one_coefficient_uses,
        "hg95_sample_variance": prior.hg95_sample_variance,
    }


def format_parents(parents: Sequence[int], labels: Sequence[str]) -> str:
    return ",".join(labels[p] for p in parents) if parents else "-"
