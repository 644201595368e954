import json
from pathlib import Path
from typing import Optional, Union

import numpy as np
from pydantic import TypeAdapter, ValidationError

from core.config.schemas import NormConfig
from core.errors import ConfigError, InvalidNormError, PointCloudFormatError
from core.normspace.space import NormSpec

_ADAPTER = TypeAdapter(NormConfig)


def parse_norm_config(text: str, source: str = "<config>") -> NormSpec:
    """
    Parse a JSON norm config into a NormSpec.

    Raises ConfigError located at line:column for JSON syntax errors and at
    the field path for schema or norm-validity errors.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(e.msg, f"{source}:{e.lineno}:{e.colno}") from None

    try:
        config = _ADAPTER.validate_python(raw)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise ConfigError(first["msg"], f"{source}: field '{field}'") from None

    try:
        return config.to_spec()
    except InvalidNormError as e:
        raise ConfigError(str(e), f"{source}: kind '{config.kind}'") from None


def load_norm_config(path: Union[str, Path]) -> NormSpec:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ConfigError(f"cannot read config ({e.strerror})", str(path)) from None
    return parse_norm_config(text, str(path))


def load_table(path: Union[str, Path], rows: int, cols: Optional[int] = None) -> np.ndarray:
    """
    Whitespace separated numeric table with exactly `rows` data lines.

    Blank lines and '#' comments are ignored.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise PointCloudFormatError(f"cannot read file ({e.strerror})", source=str(path)) from None

    table = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values = [float(tok) for tok in line.split()]
        except ValueError as e:
            raise PointCloudFormatError(f"not a number ({e})", lineno, str(path)) from None
        width = cols if cols is not None else (len(table[0]) if table else len(values))
        if len(values) != width:
            raise PointCloudFormatError(f"expected {width} columns, got {len(values)}", lineno, str(path))
        table.append(values)

    if len(table) != rows:
        raise PointCloudFormatError(f"expected {rows} rows, got {len(table)}", source=str(path))
    return np.array(table, dtype=np.float64)
