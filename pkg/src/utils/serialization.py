"""
File formats: the polygon and point-set JSON schema, JSON rendering with decimal-string
integers, and CSV tables via pandas.

Polygon file schema::

    {"mode": "polygon" | "set", "vertices": [["x", "y"], ...]}
"""
import json
import logging
from typing import Any, Iterable, List, Optional, Tuple

import pandas as pd

from src.exactmath import format_integer, parse_integer
from src.exceptions import DomainError, InputFileError
from src.geometry import ConfigurationMode, LatticePoint

logger = logging.getLogger(__name__)


def polygon_to_dict(points: Iterable[LatticePoint],
                    mode: ConfigurationMode = ConfigurationMode.POLYGON) -> dict:
    """
    Render points in the polygon file schema.

    Args:
        points (iterable): LatticePoints.
        mode (ConfigurationMode): polygon or set.

    Returns:
        dict: Schema-conforming dictionary.
    """
    return {
        'mode': ConfigurationMode(mode).value,
        'vertices': [[format_integer(p.x), format_integer(p.y)] for p in points],
    }


def polygon_from_dict(data: Any) -> Tuple[List[LatticePoint], ConfigurationMode]:
    """
    Parse the polygon file schema.

    Returns:
        tuple: (list of LatticePoint, ConfigurationMode).

    Raises:
        InputFileError: If the document does not follow the schema.
    """
    if not isinstance(data, dict):
        raise InputFileError("polygon file must be a JSON object")
    try:
        mode = ConfigurationMode(data.get('mode', ConfigurationMode.POLYGON.value))
    except ValueError:
        raise InputFileError(f"unknown mode {data.get('mode')!r}; expected 'polygon' or 'set'") from None
    vertices = data.get('vertices')
    if not isinstance(vertices, list):
        raise InputFileError("polygon file needs a 'vertices' list")
    points = []
    for index, vertex in enumerate(vertices):
        if not isinstance(vertex, list) or len(vertex) != 2:
            raise InputFileError(f"vertex {index} must be a pair [\"x\", \"y\"]")
        try:
            points.append(LatticePoint(parse_integer(vertex[0]), parse_integer(vertex[1])))
        except DomainError as e:
            raise InputFileError(f"vertex {index}: {e}") from None
    return points, mode


def read_polygon_file(path: str) -> Tuple[List[LatticePoint], ConfigurationMode]:
    """
    Load a polygon or point-set file.

    Raises:
        InputFileError: Unreadable file, malformed JSON or schema violation, each with
            its own message.
    """
    try:
        with open(path, 'r') as file:
            text = file.read()
    except OSError as e:
        raise InputFileError(f"cannot read input file {path}: {e.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFileError(f"malformed JSON in {path}: {e.msg} (line {e.lineno})") from None
    return polygon_from_dict(data)


def write_polygon_file(path: str, points: Iterable[LatticePoint],
                       mode: ConfigurationMode = ConfigurationMode.POLYGON) -> None:
    """Write points to ``path`` in the polygon file schema."""
    points = list(points)
    with open(path, 'w') as file:
        json.dump(polygon_to_dict(points, mode), file, indent=2)
    logger.info(f"Wrote {len(points)} vertices to {path}")


def _stringify(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return format_integer(value)
    if isinstance(value, dict):
        return {key: _stringify(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify(item) for item in value]
    return value


def dump_json(data: Any) -> str:
    """JSON text with every integer rendered as a decimal string."""
    return json.dumps(_stringify(data), indent=2)


def rows_to_csv(rows: List[dict], columns: Optional[List[str]] = None) -> str:
    """CSV text for a list of flat dictionaries."""
    df = pd.DataFrame(rows, columns=columns, dtype=object)
    return df.to_csv(index=False)
