"""
Security tests for the net file parser and the HTTP service.

Tests cover:
- Document size limits and encoding
- Identifier validation against injected text
- State-space caps on untrusted input
"""

import pytest
from fastapi.testclient import TestClient

from app import app
from src.net.explorer import explore
from src.parsers.net_parser import load_net, parse_net
from src.utils.constants import MAX_NET_DOCUMENT_BYTES
from src.utils.errors import NetParseError, StateSpaceLimitError


class TestDocumentSizeLimit:
    """Test document size validation."""

    def test_reject_documents_over_1mb(self):
        """Reject documents over the size limit."""
        document = "places: a\n" + "# filler\n" * (MAX_NET_DOCUMENT_BYTES // 9 + 1) + "initial:\n"

        with pytest.raises(NetParseError, match="larger than"):
            parse_net(document)

    def test_reject_large_files_before_reading(self, tmp_path):
        """Oversized files are rejected by size."""
        path = tmp_path / "big.net"
        path.write_bytes(b"#" * (MAX_NET_DOCUMENT_BYTES + 1))

        with pytest.raises(NetParseError, match="larger than"):
            load_net(path)

    def test_accept_small_documents(self):
        """Small documents parse normally."""
        parse_net("places: a\ninitial: a\n")

    def test_upload_over_limit(self):
        """The HTTP service answers 413 for oversized uploads."""
        client = TestClient(app)
        content = b"#" * (MAX_NET_DOCUMENT_BYTES + 1)
        response = client.post("/analyze", files={"file": ("big.net", content, "text/plain")})
        assert response.status_code == 413


class TestDocumentEncoding:
    """Test handling of documents that are not UTF-8 text."""

    def test_reject_invalid_utf8_file(self, tmp_path):
        """Undecodable bytes raise NetParseError at their position."""
        path = tmp_path / "binary.net"
        path.write_bytes(b"places: a\n\xff\xfe\ninitial:\n")

        with pytest.raises(NetParseError, match="UTF-8") as exc_info:
            load_net(path)
        assert (exc_info.value.line, exc_info.value.column) == (2, 1)


class TestIdentifierValidation:
    """Identifiers are restricted to letters, digits and underscores."""

    @pytest.mark.parametrize("name", ["p1;rm", "../x", "a$b", "_a", "'p'"])
    def test_reject_injected_place_names(self, name):
        with pytest.raises(NetParseError, match="invalid identifier"):
            parse_net(f"places: {name}\ninitial:\n")

    def test_reject_injected_event_names(self):
        with pytest.raises(NetParseError, match="invalid identifier"):
            parse_net("places: a\nevent t;drop pre a post -\ninitial:\n")


class TestStateSpaceCap:
    """Exploration of untrusted nets is bounded."""

    def test_wide_net_hits_cap(self):
        """21 free places exceed the default cap of 2^20 in all-states mode."""
        places = " ".join(f"q{k}" for k in range(21))
        net = parse_net(f"places: {places}\ninitial:\n")

        with pytest.raises(StateSpaceLimitError):
            explore(net, "all-states")
