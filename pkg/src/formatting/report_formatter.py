"""Rendering of toolkit results as canonical JSON or aligned text tables."""

import io
import json
from typing import Any, Dict, List, Tuple

from rich.console import Console
from rich.table import Table

from ..config.constants import JSON_INDENT, TABLE_WIDTH
from ..utils.logging import get_logger

logger = get_logger(__name__)


class ReportFormatter:
    """Formats result dictionaries; output is byte-identical for equal inputs."""

    @staticmethod
    def to_json(result: Dict[str, Any]) -> str:
        return json.dumps(result, indent=JSON_INDENT, sort_keys=True, ensure_ascii=False)

    @staticmethod
    def _flatten(value: Any, prefix: str = "") -> List[Tuple[str, str]]:
        """Nested dicts become dotted keys; lists of scalars stay on one line."""
        if isinstance(value, dict):
            rows = []
            for key in sorted(value, key=str):
                name = f"{prefix}.{key}" if prefix else str(key)
                rows.extend(ReportFormatter._flatten(value[key], name))
            return rows
        if isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
            return [(prefix, json.dumps(value, sort_keys=True, ensure_ascii=False))]
        if isinstance(value, list):
            return [(prefix, ", ".join(str(v) for v in value))]
        return [(prefix, "null" if value is None else str(value))]

    @staticmethod
    def to_table(result: Dict[str, Any], title: str = "") -> str:
        table = Table(title=title or None, show_lines=False)
        table.add_column("key", no_wrap=True)
        table.add_column("value", overflow="fold")
        for key, value in ReportFormatter._flatten(result):
            table.add_row(key, value)
        buffer = io.StringIO()
        console = Console(file=buffer, width=TABLE_WIDTH, color_system=None, force_terminal=False)
        console.print(table)
        return buffer.getvalue()

    @staticmethod
    def render(result: Dict[str, Any], output_format: str, title: str = "") -> str:
        if output_format == "table":
            return ReportFormatter.to_table(result, title)
        return ReportFormatter.to_json(result)
