"""Parser and emitter for the net file format."""

from .net_parser import NetParser, emit_net, load_net, parse_net

__all__ = [
    'NetParser',
    'emit_net',
    'load_net',
    'parse_net',
]
