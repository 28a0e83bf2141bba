import json
from pathlib import Path
from typing import IO, Iterable, Iterator, Optional, Union

from pydantic import BaseModel

from catalog.graph6 import emit_graph6, parse_graph6
from cores.graph_core import Graph
from utils.errors import Graph6ParseError, InputError
from utils.logger import get_catalog_logger


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Графы из строк каталога; комментарии '#' и пустые строки пропускаются"""
    for number, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n").strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield parse_graph6(line)
        except Graph6ParseError as e:
            get_catalog_logger().log_error("catalog_parse_error", str(e),
                                           graph6=line, context={"line": number})
            raise e.at_line(number) from e


def read_catalog(path: Union[str, Path]) -> Iterator[Graph]:
    try:
        handle = open(path, "r", encoding="utf-8", newline="")
    except OSError as e:
        raise InputError(f"cannot read catalog {path}: {e}") from e
    with handle:
        yield from iter_graph6_lines(handle)


def write_catalog(path: Union[str, Path], graphs: Iterable[Graph],
                  comment: Optional[str] = None) -> int:
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        if comment:
            for line in comment.splitlines():
                f.write(f"# {line}\n")
        for g in graphs:
            f.write(emit_graph6(g) + "\n")
            count += 1
    get_catalog_logger().info(f"Wrote {count} graphs to {path}", path=str(path), count=count)
    return count


def dump_jsonl(records: Iterable[Union[BaseModel, dict]], stream: IO[str]) -> int:
    """JSON-lines: одна запись на строку, ключи в порядке полей модели"""
    count = 0
    for record in records:
        if isinstance(record, BaseModel):
            stream.write(record.model_dump_json() + "\n")
        else:
            stream.write(json.dumps(record, ensure_ascii=False) + "\n")
        count += 1
    return count
