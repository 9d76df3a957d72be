"""
Serialization Utilities for rpgraph
Shapes results into JSON: vertex sets as sorted lists, canonical key order,
stable file output.
"""
import json
from pathlib import Path
from typing import Any, Iterable, List, Union


class ReportSerializer:
    """
    Static helpers shared by every JSON producer.

    This class provides:
    - Vertex-set shaping (sorted members)
    - Deterministic dumps with sorted keys
    - Reading and writing JSON files
    """

    @staticmethod
    def vertex_sets(sets: Iterable[Iterable[int]]) -> List[List[int]]:
        """Each set as a sorted list, outer order kept"""
        return [sorted(s) for s in sets]

    @staticmethod
    def dumps(payload: Any, indent: int = 2) -> str:
        """Byte-stable JSON text: sorted keys, fixed indent, trailing newline"""
        return json.dumps(payload, sort_keys=True, indent=indent, ensure_ascii=True) + "\n"

    @staticmethod
    def write_json(path: Union[str, Path], payload: Any) -> Path:
        path = Path(path)
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(ReportSerializer.dumps(payload), encoding="utf-8")
        return path

    @staticmethod
    def read_json(path: Union[str, Path]) -> Any:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
