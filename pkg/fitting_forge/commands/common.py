"""
Shared CLI helpers - common flags, variable resolution, text rendering
"""

import argparse
from typing import Any, Iterable, Optional

from fitting_forge.models.poly import VarSet, infer_varset
from fitting_forge.schemas.reports import Report
from fitting_forge.utils.errors import ParseError

CHART_NAMING_NOTE = "chart coordinates reuse the root variable names (z_b stands for z_b')"


def common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--json", action="store_true", help="machine-readable JSON report")
    parent.add_argument("--vars", default=None, help="comma-separated variable order, e.g. x,y,z")
    return parent


def resolve_vars(option: Optional[str], texts: Iterable[str]) -> VarSet:
    """``--vars`` if given, else every identifier in the inputs sorted by name."""
    if option is None:
        return infer_varset(texts)
    names = tuple(name.strip() for name in option.split(","))
    try:
        return VarSet(names)
    except ValueError as e:
        raise ParseError(f"invalid --vars {option!r}: {e}") from None


def budget(value: Optional[int], flag: str, default: int) -> int:
    """The ``--max-*`` / ``--alpha-max`` value, or the configured default when absent."""
    if value is None:
        return default
    if value < 1:
        raise ParseError(f"{flag} must be a positive integer, got {value}")
    return value


def _lines(value: Any, indent: int) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        out = []
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                out.append(f"{pad}{key}:")
                out.extend(_lines(item, indent + 1))
            else:
                out.append(f"{pad}{key}: {_scalar(item)}")
        return out
    if isinstance(value, list):
        out = []
        for item in value:
            if isinstance(item, (dict, list)) and item:
                out.append(f"{pad}-")
                out.extend(_lines(item, indent + 1))
            else:
                out.append(f"{pad}- {_scalar(item)}")
        return out
    return [f"{pad}{_scalar(value)}"]


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, dict)):
        return "[]" if isinstance(value, list) else "{}"
    return str(value)


def render_text(report: Report) -> str:
    return "\n".join(_lines(report.model_dump(), 0))


def render_report(report: Report, as_json: bool) -> str:
    if as_json:
        return report.model_dump_json(indent=2)
    return render_text(report)
