# src/utils/export.py
"""
CSV and JSON writers for sampled data and reports.

CSV: '#'-prefixed "key: value" metadata lines, then a pandas frame with
'%.15g' floats. JSON: {"header": ..., "body": ...} with sorted keys; only
the header carries the timestamp, so bodies are byte-comparable.
"""
import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, Optional, Union

import pandas as pd

from src.models.qc_result import convert_numpy
from src.utils.errors import DomainError

logger = logging.getLogger(__name__)

FORMATS = ("csv", "json")
FLOAT_FORMAT = "%.15g"

PathLike = Union[str, Path]


def _ensure_writable(path: PathLike) -> Path:
    path = Path(path)
    if path.exists() and path.is_dir():
        raise DomainError(f"output path {path} is a directory")
    if not path.parent.exists():
        raise DomainError(f"output directory {path.parent} does not exist")
    return path


def frame_to_csv_text(frame: pd.DataFrame, metadata: Optional[Dict] = None) -> str:
    lines = [f"# {key}: {json.dumps(convert_numpy(value), sort_keys=True)}"
             for key, value in sorted((metadata or {}).items())]
    body = frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return "\n".join(lines) + ("\n" if lines else "") + body


def json_text(body: Dict, header: Optional[Dict] = None) -> str:
    header = dict(header or {})
    header.setdefault("generated", datetime.now(timezone.utc).isoformat(timespec="seconds"))
    document = {"header": convert_numpy(header), "body": convert_numpy(body)}
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def frame_to_body(frame: pd.DataFrame, metadata: Optional[Dict] = None) -> Dict:
    return {"metadata": convert_numpy(metadata or {}),
            "columns": list(frame.columns),
            "rows": convert_numpy(frame.to_numpy().tolist())}


def write_frame(frame: pd.DataFrame, path: Optional[PathLike], fmt: str = "csv",
                metadata: Optional[Dict] = None, header: Optional[Dict] = None) -> str:
    """Serialise `frame`; writes to `path` when given and returns the text."""
    if fmt not in FORMATS:
        raise DomainError(f"output format must be one of {FORMATS}, got '{fmt}'")
    if fmt == "csv":
        text = frame_to_csv_text(frame, metadata)
    else:
        text = json_text(frame_to_body(frame, metadata), header)
    if path is not None:
        target = _ensure_writable(path)
        target.write_text(text, encoding="utf-8")
        logger.info(f"wrote {len(frame)} rows to {target}")
    return text


def write_document(body: Dict, path: Optional[PathLike], header: Optional[Dict] = None) -> str:
    text = json_text(body, header)
    if path is not None:
        target = _ensure_writable(path)
        target.write_text(text, encoding="utf-8")
        logger.info(f"wrote report to {target}")
    return text
