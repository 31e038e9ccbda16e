"""
Unit tests for the net file parser and emitter.

Tests cover:
- Valid documents: comments, blank lines, empty lists, empty events
- Errors with line and column
- Recoverable warnings
- Emitter output and parse/emit round trips
"""

from io import StringIO

import pytest

from src.parsers.net_parser import NetParser, emit_net, load_net, parse_net
from src.pipelines.generator import pipeline
from src.utils.errors import NetParseError


P3_DOCUMENT = """\
places: p1 p2
event t1 pre - post p1
event t2 pre p1 post p2
event t3 pre p2 post -
initial:
"""


# =============================================================================
# Valid Document Tests
# =============================================================================

class TestParseValid:
    """Tests for well-formed documents."""

    def test_parse_p3(self):
        """The P_3 document parses to the generated P_3."""
        assert parse_net(P3_DOCUMENT) == pipeline(3)

    def test_declaration_order_preserved(self):
        """Places and events keep their order."""
        net = parse_net("places: z a\nevent b pre z post a\nevent a1 pre a post z\ninitial: z\n")
        assert net.places == ("z", "a")
        assert net.event_names == ("b", "a1")
        assert net.initial.to_string() == "10"

    def test_comments_and_blank_lines(self, fixtures_path):
        """Comments and blank lines are ignored."""
        net = load_net(fixtures_path / "cycle.net")
        assert net.event_names == ("go", "back")
        assert net.initial.to_string() == "10"

    def test_no_events(self):
        """A document without events is a net with no transitions."""
        net = parse_net("places: a b\ninitial: a\n")
        assert net.events == ()

    def test_comma_lists(self):
        """Pre/post lists are comma separated."""
        net = parse_net("places: a b c\nevent t pre a,b post c\ninitial: a b\n")
        assert net.event("t").pre == frozenset({"a", "b"})

    def test_stringio_source(self):
        """StringIO sources are parsed from memory."""
        assert NetParser().parse(StringIO(P3_DOCUMENT)) == pipeline(3)

    def test_repeated_place_warns(self):
        """A place repeated in one list is dropped with a warning."""
        parser = NetParser()
        net = parser.parse_text("places: a b\nevent t pre a,a post b\ninitial: a\n")
        assert net.event("t").pre == frozenset({"a"})
        assert len(parser.warnings) == 1
        assert "repeated" in parser.warnings[0]


# =============================================================================
# Error Tests
# =============================================================================

class TestParseErrors:
    """Tests for malformed documents."""

    def test_undeclared_place(self, fixtures_path):
        """The error names the place and its position."""
        with pytest.raises(NetParseError) as exc:
            load_net(fixtures_path / "undeclared.net")
        assert exc.value.line == 2
        assert exc.value.column == 21
        assert "'c'" in exc.value.reason

    def test_duplicate_place(self):
        """Duplicate place identifiers are rejected."""
        with pytest.raises(NetParseError, match="duplicate place") as exc:
            parse_net("places: a a\ninitial:\n")
        assert (exc.value.line, exc.value.column) == (1, 11)

    def test_duplicate_event(self):
        """Duplicate event identifiers are rejected."""
        with pytest.raises(NetParseError, match="duplicate event"):
            parse_net("places: a\nevent t pre a post -\nevent t pre - post a\ninitial:\n")

    def test_missing_initial(self):
        """A document must end with an initial line."""
        with pytest.raises(NetParseError, match="initial"):
            parse_net("places: a\nevent t pre a post -\n")

    def test_missing_places(self):
        """An empty document has no places section."""
        with pytest.raises(NetParseError, match="places"):
            parse_net("# nothing here\n")

    def test_places_first(self):
        """The places line comes first."""
        with pytest.raises(NetParseError) as exc:
            parse_net("event t pre - post -\nplaces: a\ninitial:\n")
        assert exc.value.line == 1

    def test_content_after_initial(self):
        """initial is the last section."""
        with pytest.raises(NetParseError) as exc:
            parse_net("places: a\ninitial:\nevent t pre a post -\n")
        assert exc.value.line == 3

    def test_wrong_event_shape(self):
        """Event lines have exactly six tokens."""
        with pytest.raises(NetParseError, match="6 tokens|tokens"):
            parse_net("places: a\nevent t pre a\ninitial:\n")
        with pytest.raises(NetParseError, match="expected 'post'"):
            parse_net("places: a\nevent t pre a pots -\ninitial:\n")

    def test_invalid_identifier(self):
        """Identifiers start with a letter."""
        with pytest.raises(NetParseError, match="invalid identifier"):
            parse_net("places: 1a\ninitial:\n")

    def test_missing_file(self, tmp_path):
        """A missing file raises FileNotFoundError, not a parse error."""
        with pytest.raises(FileNotFoundError):
            load_net(tmp_path / "absent.net")

    def test_parse_error_is_value_error(self):
        """Callers catching ValueError also catch parse errors."""
        with pytest.raises(ValueError):
            parse_net("places:\ninitial: x\n")


# =============================================================================
# Emitter Tests
# =============================================================================

class TestEmit:
    """Tests for the emitter."""

    def test_emit_p3(self):
        """Emitting P_3 gives the canonical document."""
        assert emit_net(pipeline(3)) == P3_DOCUMENT

    def test_title_comment(self):
        """The optional title becomes a leading comment."""
        assert emit_net(pipeline(2), title="P_2").startswith("# P_2\nplaces: p1\n")

    @pytest.mark.parametrize("n", range(2, 9))
    @pytest.mark.parametrize("variant", ["P", "N", "Nprime"])
    def test_round_trip(self, n, variant):
        """parse(emit(net)) == net for every generated pipeline."""
        net = pipeline(n, variant)
        assert parse_net(emit_net(net)) == net

    def test_initial_marking_emitted(self):
        """Occupied places are listed in declaration order."""
        net = parse_net("places: a b c\ninitial: c a\n")
        assert emit_net(net).endswith("initial: a c\n")
