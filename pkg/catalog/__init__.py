from .graph6 import parse_graph6, emit_graph6, strip_graph6_header

__all__ = ['parse_graph6', 'emit_graph6', 'strip_graph6_header']
