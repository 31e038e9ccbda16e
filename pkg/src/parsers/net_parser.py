"""
Parser and emitter for the net file format.

Line-oriented text; `#` starts a comment. A document is one `places:` line,
any number of `event <name> pre <list> post <list>` lines and a final
`initial:` line. Lists are comma separated without spaces; `-` is the
empty set.

    places: p1 p2
    event t1 pre - post p1
    event t2 pre p1 post p2
    event t3 pre p2 post -
    initial:
"""

import logging
import re
from io import StringIO
from pathlib import Path
from typing import Dict, List, Optional, Set, Tuple, Union

from pydantic import ValidationError

from src.models.elementary_net import ElementaryNet, EventDef
from src.utils.constants import (
    COMMENT_TOKEN,
    EMPTY_SET_TOKEN,
    IDENTIFIER_PATTERN,
    KEYWORD_EVENT,
    KEYWORD_INITIAL,
    KEYWORD_PLACES,
    KEYWORD_POST,
    KEYWORD_PRE,
    LIST_SEPARATOR,
    MAX_NET_DOCUMENT_BYTES,
)
from src.utils.errors import NetParseError


logger = logging.getLogger(__name__)

_IDENTIFIER = re.compile(rf"^{IDENTIFIER_PATTERN}$")
_TOKEN = re.compile(r"\S+")

Token = Tuple[str, int]


class NetParser:
    """
    Parses net documents into ElementaryNet values.

    Recoverable oddities (a place repeated inside one list) are dropped,
    logged and collected in `warnings`; everything else raises NetParseError
    with the line and column of the offending token.
    """

    def __init__(self) -> None:
        """Initialize parser with empty warning list."""
        self.warnings: List[str] = []

    def parse(self, source: Union[str, Path, StringIO]) -> ElementaryNet:
        """
        Parse a net file.

        Args:
            source: File path or StringIO containing the document

        Returns:
            ElementaryNet with declaration order preserved

        Raises:
            FileNotFoundError: If file path doesn't exist
            NetParseError: If the document is malformed or too large
        """
        if isinstance(source, StringIO):
            return self.parse_text(source.getvalue())

        path = Path(source)
        if not path.exists():
            raise FileNotFoundError(f"Net file not found: {path}")
        if path.stat().st_size > MAX_NET_DOCUMENT_BYTES:
            raise NetParseError(
                f"document is larger than {MAX_NET_DOCUMENT_BYTES} bytes", line=1
            )
        content = path.read_bytes()
        try:
            document = content.decode("utf-8")
        except UnicodeDecodeError as e:
            line_start = content.rfind(b"\n", 0, e.start) + 1
            raise NetParseError(
                "document is not valid UTF-8 text",
                line=content.count(b"\n", 0, e.start) + 1,
                column=e.start - line_start + 1,
            ) from e
        return self.parse_text(document)

    def parse_text(self, document: str) -> ElementaryNet:
        """Parse a net document held in memory."""
        self.warnings = []  # Reset warnings
        if len(document.encode("utf-8")) > MAX_NET_DOCUMENT_BYTES:
            raise NetParseError(f"document is larger than {MAX_NET_DOCUMENT_BYTES} bytes", line=1)

        places: Optional[List[str]] = None
        place_set: Set[str] = set()
        events: List[EventDef] = []
        event_names: Set[str] = set()
        initial: Optional[List[str]] = None
        last_line = 0

        for number, tokens in self._lines(document):
            last_line = number
            keyword, column = tokens[0]

            if initial is not None:
                raise NetParseError(f"unexpected {keyword!r} after 'initial:'", number, column)

            if places is None:
                if keyword != KEYWORD_PLACES:
                    raise NetParseError(f"expected {KEYWORD_PLACES!r}, found {keyword!r}", number, column)
                places = []
                for name, col in tokens[1:]:
                    self._check_identifier(name, number, col)
                    if name in place_set:
                        raise NetParseError(f"duplicate place identifier {name!r}", number, col)
                    place_set.add(name)
                    places.append(name)
                continue

            if keyword == KEYWORD_EVENT:
                event = self._parse_event(tokens, number, place_set)
                if event.name in event_names:
                    raise NetParseError(
                        f"duplicate event identifier {event.name!r}", number, tokens[1][1]
                    )
                event_names.add(event.name)
                events.append(event)
            elif keyword == KEYWORD_INITIAL:
                initial = self._parse_names(tokens[1:], number, place_set, "initial marking")
            elif keyword == KEYWORD_PLACES:
                raise NetParseError(f"{KEYWORD_PLACES!r} declared twice", number, column)
            else:
                raise NetParseError(
                    f"expected {KEYWORD_EVENT!r} or {KEYWORD_INITIAL!r}, found {keyword!r}",
                    number, column,
                )

        if places is None:
            raise NetParseError(f"missing {KEYWORD_PLACES!r} section", last_line + 1)
        if initial is None:
            raise NetParseError(f"missing {KEYWORD_INITIAL!r} section", last_line + 1)

        try:
            return ElementaryNet(places=tuple(places), events=tuple(events), initial=initial)
        except ValidationError as e:
            raise NetParseError(f"invalid net: {e.errors()[0]['msg']}", last_line) from e

    @staticmethod
    def _lines(document: str):
        """(line number, [(token, column)]) for every non-blank line, comments removed."""
        for number, raw in enumerate(document.splitlines(), start=1):
            line = raw.split(COMMENT_TOKEN, 1)[0]
            tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
            if tokens:
                yield number, tokens

    @staticmethod
    def _check_identifier(name: str, line: int, column: int) -> None:
        if not _IDENTIFIER.match(name):
            raise NetParseError(f"invalid identifier {name!r}", line, column)

    def _parse_event(self, tokens: List[Token], line: int, places: Set[str]) -> EventDef:
        shape = [KEYWORD_EVENT, None, KEYWORD_PRE, None, KEYWORD_POST, None]
        if len(tokens) != len(shape):
            column = tokens[min(len(tokens), len(shape)) - 1][1]
            raise NetParseError(
                f"expected 'event <name> pre <places|-> post <places|->', got {len(tokens)} tokens",
                line, column,
            )
        for (text, column), keyword in zip(tokens, shape):
            if keyword is not None and text != keyword:
                raise NetParseError(f"expected {keyword!r}, found {text!r}", line, column)

        name, name_column = tokens[1]
        self._check_identifier(name, line, name_column)
        pre = self._parse_list(tokens[3], line, places, f"pre-set of {name}")
        post = self._parse_list(tokens[5], line, places, f"post-set of {name}")
        return EventDef(name=name, pre=frozenset(pre), post=frozenset(post))

    def _parse_list(self, token: Token, line: int, places: Set[str], what: str) -> List[str]:
        text, column = token
        if text == EMPTY_SET_TOKEN:
            return []
        names: List[Token] = []
        offset = column
        for part in text.split(LIST_SEPARATOR):
            names.append((part, offset))
            offset += len(part) + len(LIST_SEPARATOR)
        return self._parse_names(names, line, places, what)

    def _parse_names(self, names: List[Token], line: int, places: Set[str], what: str) -> List[str]:
        result: List[str] = []
        for name, column in names:
            self._check_identifier(name, line, column)
            if name not in places:
                raise NetParseError(f"undeclared place {name!r} in {what}", line, column)
            if name in result:
                warning = f"Line {line}: place {name!r} repeated in {what}; ignoring repeat"
                self.warnings.append(warning)
                logger.warning(warning)
                continue
            result.append(name)
        return result


def parse_net(document: str) -> ElementaryNet:
    """Convenience function to parse a net document held in memory."""
    return NetParser().parse_text(document)


def load_net(path: Union[str, Path]) -> ElementaryNet:
    """Convenience function to parse a net file from disk."""
    return NetParser().parse(path)


def _ordered(names, places: Tuple[str, ...]) -> List[str]:
    position: Dict[str, int] = {p: k for k, p in enumerate(places)}
    return sorted(names, key=position.__getitem__)


def emit_net(net: ElementaryNet, title: Optional[str] = None) -> str:
    """
    Render a net in the net file format.

    Pre/post lists follow the place declaration order, so emitting the same
    net twice gives identical text.
    """
    def render(names) -> str:
        ordered = _ordered(names, net.places)
        return LIST_SEPARATOR.join(ordered) if ordered else EMPTY_SET_TOKEN

    lines = []
    if title:
        lines.append(f"{COMMENT_TOKEN} {title}")
    lines.append(" ".join([KEYWORD_PLACES, *net.places]))
    for event in net.events:
        lines.append(
            f"{KEYWORD_EVENT} {event.name} {KEYWORD_PRE} {render(event.pre)} "
            f"{KEYWORD_POST} {render(event.post)}"
        )
    lines.append(" ".join([KEYWORD_INITIAL, *_ordered(net.initial.occupied(net.places), net.places)]))
    return "\n".join(lines) + "\n"
