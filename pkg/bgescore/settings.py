from pathlib import Path
from typing import Union

from bgescore.utils.errors import UsageError
from bgescore.utils.handlers.file_formats import FileFormatsHandler


def load_config(path: Union[str, Path, None] = None) -> dict:
    """Run configuration from a JSON or YAML file; an empty file is an empty config."""
    path = Path(path or "bgescore.yaml")
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")
    with path.open(encoding="utf-8") as f:
        content = f.read()
    if not content.strip():
        return {}

    try:
        cfg = FileFormatsHandler.convert_string_to_json(content)
    except ValueError as e:
        raise UsageError(f"Config file {path}: {e}") from e
    if not isinstance(cfg, dict):
        raise UsageError(f"Config file {path} must hold a mapping, got {type(cfg).__name__}")
    return cfg
