"""Load committed golden values for offline tests."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

GOLDEN_DIR = Path(__file__).resolve().parent / "fixtures" / "golden"


def load_golden(name: str) -> Any:
    """Load a JSON golden file by filename (with or without ``.json``)."""
    path = GOLDEN_DIR / (name if name.endswith(".json") else f"{name}.json")
    if not path.is_file():
        raise FileNotFoundError(f"Missing golden file: {path}")
    return json.loads(path.read_text(encoding="utf-8"))


def golden_cases(name: str) -> list[tuple[str, dict[str, Any]]]:
    """``(id, case)`` pairs for ``pytest.mark.parametrize`` with ``ids``."""
    return [(case["id"], case) for case in load_golden(name)["cases"]]
