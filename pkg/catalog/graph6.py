from typing import Tuple

import networkx as nx

from cores.graph_core import Graph
from utils.config import get_limits
from utils.errors import Graph6ParseError, UnsupportedSizeError

GRAPH6_HEADER = ">>graph6<<"


def _payload(text: str) -> Tuple[str, int]:
    """Строка без заголовка и пробелов и смещение ее начала в исходном тексте"""
    s = text.lstrip()
    base = len(text) - len(s)
    if s.startswith(GRAPH6_HEADER):
        rest = s[len(GRAPH6_HEADER):]
        s = rest.lstrip()
        base += len(GRAPH6_HEADER) + len(rest) - len(s)
    return s.rstrip(), base


def strip_graph6_header(text: str) -> str:
    """Удаление необязательного заголовка '>>graph6<<' и пробелов"""
    return _payload(text)[0]


def _edge_bit_count(n: int) -> int:
    return n * (n - 1) // 2


def _validate(s: str, base: int) -> int:
    """Проверка байтов, длины и битов выравнивания; networkx их не различает"""
    if not s:
        raise Graph6ParseError("empty string", base)

    for offset, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"byte {ord(ch)} outside 63..126", base + offset)

    head = ord(s[0])
    if head == 126:
        raise Graph6ParseError("extended size header (n > 62) is not supported", base)
    n = head - 63
    if n > get_limits().max_graph6_n:
        raise Graph6ParseError(f"n={n} exceeds the supported maximum", base)

    bit_count = _edge_bit_count(n)
    expected = 1 + (bit_count + 5) // 6
    if len(s) != expected:
        offset = min(len(s), expected)
        raise Graph6ParseError(
            f"length {len(s)} does not match n={n} (expected {expected})", base + offset)

    if bit_count % 6:
        pad = 6 - bit_count % 6
        if (ord(s[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6ParseError("nonzero padding bits", base + len(s) - 1)
    return n


def parse_graph6(text: str) -> Graph:
    """Разбор короткой формы graph6 (n <= 62); смещения ошибок - от начала исходной строки"""
    s, base = _payload(text)
    n = _validate(s, base)
    decoded = nx.from_graph6_bytes(s.encode("ascii"))
    return Graph.from_edges(n, decoded.edges())


def emit_graph6(g: Graph) -> str:
    if g.n > get_limits().max_graph6_n:
        raise UnsupportedSizeError(f"graph6 short form supports n <= 62, got n={g.n}")
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nx.to_graph6_bytes(nxg, header=False).decode("ascii").strip()
