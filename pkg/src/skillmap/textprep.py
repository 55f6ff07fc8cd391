"""Document intake: validation, text extraction, cleaning and chunking.

All functions here are pure; they can run concurrently without shared state.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from html.parser import HTMLParser
from xml.etree import ElementTree

from .errors import (
    EmptyDocument,
    EncodingError,
    FormatMismatch,
    MalformedMarkup,
    OversizeDocument,
    UnsupportedFormat,
)

SUPPORTED_FORMATS = ("txt", "html", "xml", "pre_extracted")

DEFAULT_MAX_SIZE_BYTES = 20 * 1024 * 1024
DEFAULT_CHUNK_SIZE_LIMIT = 120
MIN_CHUNK_SIZE_LIMIT = 8


@dataclass(frozen=True)
class PrepConfig:
    max_size_bytes: int = DEFAULT_MAX_SIZE_BYTES
    chunk_size_limit: int = DEFAULT_CHUNK_SIZE_LIMIT
    supported_formats: tuple[str, ...] = SUPPORTED_FORMATS


@dataclass(frozen=True)
class RawDocument:
    name: str
    declared_format: str
    data: bytes

    @property
    def size_bytes(self) -> int:
        return len(self.data)


@dataclass(frozen=True)
class CleanText:
    text: str
    source_name: str
    removed_artifact_count: int


@dataclass(frozen=True)
class Chunk:
    index: int
    text: str
    token_count: int


def validate_document(doc: RawDocument, config: PrepConfig | None = None) -> RawDocument:
    """Check format, size and encoding; return the document unchanged."""
    config = config or PrepConfig()
    if doc.declared_format not in config.supported_formats:
        raise UnsupportedFormat(f"unsupported format: {doc.declared_format!r}")
    if doc.size_bytes > config.max_size_bytes:
        raise OversizeDocument(
            f"{doc.name}: {doc.size_bytes} bytes exceeds limit {config.max_size_bytes}"
        )
    try:
        text = _decode(doc.data)
    except UnicodeDecodeError as exc:
        raise EncodingError(f"{doc.name}: not valid UTF-8: {exc}") from exc
    if doc.declared_format in ("html", "xml"):
        if not text.lstrip().startswith("<"):
            raise FormatMismatch(
                f"{doc.name}: declared {doc.declared_format} but content lacks markup"
            )
    return doc


def _decode(data: bytes) -> str:
    if data.startswith(b"\xef\xbb\xbf"):
        data = data[3:]
    return data.decode("utf-8")


_SKIP_TAGS = frozenset({"script", "style", "head"})
_BLOCK_TAGS = frozenset({
    "p", "div", "br", "li", "ul", "ol", "dl", "dt", "dd", "table", "tr", "td",
    "th", "h1", "h2", "h3", "h4", "h5", "h6", "blockquote", "pre", "section",
    "article", "header", "footer", "nav", "aside", "figure", "figcaption",
    "main", "form", "hr",
})


class _TextExtractor(HTMLParser):
    """Lenient HTML-to-text pass: drops script/style/head content, keeps
    block-level elements on separate lines."""

    def __init__(self) -> None:
        super().__init__(convert_charrefs=True)
        self.pieces: list[str] = []
        self._skip_depth = 0

    def handle_starttag(self, tag, attrs):
        if tag in _SKIP_TAGS:
            self._skip_depth += 1
        elif tag in _BLOCK_TAGS:
            self.pieces.append("\n")

    def handle_endtag(self, tag):
        if tag in _SKIP_TAGS:
            if self._skip_depth > 0:
                self._skip_depth -= 1
        elif tag in _BLOCK_TAGS:
            self.pieces.append("\n")

    def handle_data(self, data):
        if self._skip_depth == 0 and data.strip():
            self.pieces.append(data)

    def text(self) -> str:
        joined = "".join(self.pieces)
        lines = [ln.strip() for ln in joined.split("\n")]
        return "\n".join(ln for ln in lines if ln)


def extract_text(doc: RawDocument) -> str:
    """Decode the document body into plain text per its declared format."""
    body = _decode(doc.data)
    if doc.declared_format in ("txt", "pre_extracted"):
        return body
    if doc.declared_format == "html":
        parser = _TextExtractor()
        try:
            parser.feed(body)
            parser.close()
        except Exception as exc:  # html.parser is lenient; defensive only
            raise MalformedMarkup(f"{doc.name}: unrecoverable markup: {exc}") from exc
        return parser.text()
    if doc.declared_format == "xml":
        try:
            root = ElementTree.fromstring(body)
        except ElementTree.ParseError as exc:
            raise MalformedMarkup(f"{doc.name}: bad XML: {exc}") from exc
        pieces = [t.strip() for t in root.itertext()]
        return "\n".join(p for p in pieces if p)
    raise UnsupportedFormat(doc.declared_format)


# Bracketed numeric citation markers like [12] or [3,4,17]. Capped at 3
# digits per number so fragments of legal years ("[2021") survive.
_CITATION_RE = re.compile(r"\[\d{1,3}(?:\s*,\s*\d{1,3})*\]")
# Footnote digits glued to sentence-final punctuation ("...end.3 "). The
# letter lookbehind keeps decimals like "3.5" intact.
_FOOTNOTE_RE = re.compile(r"(?<=[A-Za-z][.!?])\d{1,2}(?=\s|$)")
_CONTROL_RE = re.compile(r"[\x00-\x08\x0b-\x1f\x7f]")


def clean_text(raw: str, source_name: str = "") -> CleanText:
    """Strip citation markers, footnote digits and control characters;
    normalize whitespace. Digits outside removed markers are preserved."""
    removed = 0

    def _count_sub(pattern: re.Pattern, repl: str, s: str) -> str:
        nonlocal removed
        s, n = pattern.subn(repl, s)
        removed += n
        return s

    text = _count_sub(_CONTROL_RE, "", raw)
    text = _count_sub(_CITATION_RE, "", text)
    text = _count_sub(_FOOTNOTE_RE, "", text)
    text = re.sub(r"[ \t]+", " ", text)
    text = re.sub(r" ?\n ?", "\n", text)
    text = re.sub(r"\n{3,}", "\n\n", text)
    return CleanText(text=text.strip(), source_name=source_name, removed_artifact_count=removed)


def split_sentences(text: str) -> list[str]:
    """Split on sentence terminators followed by whitespace or end of text."""
    return [s for s in (" ".join(t) for t in _sentence_token_groups(text.split())) if s]


_TRAILING_PUNCT = "\"')]}»”’"


def _ends_sentence(token: str) -> bool:
    stripped = token.rstrip(_TRAILING_PUNCT)
    return bool(stripped) and stripped[-1] in ".!?"


def _sentence_token_groups(tokens: list[str]) -> list[list[str]]:
    """Group whitespace tokens into sentences; every token lands in exactly
    one group, so chunk coverage is exact by construction."""
    groups: list[list[str]] = []
    current: list[str] = []
    for token in tokens:
        current.append(token)
        if _ends_sentence(token):
            groups.append(current)
            current = []
    if current:
        groups.append(current)
    return groups


def chunk_text(clean: CleanText, chunk_size_limit: int = DEFAULT_CHUNK_SIZE_LIMIT) -> list[Chunk]:
    """Greedy sentence packing into chunks of at most ``chunk_size_limit``
    whitespace tokens. Overlong sentences are hard-split at token boundaries."""
    if chunk_size_limit < MIN_CHUNK_SIZE_LIMIT:
        raise ValueError(f"chunk_size_limit must be >= {MIN_CHUNK_SIZE_LIMIT}")
    all_tokens = clean.text.split()
    if not all_tokens:
        raise EmptyDocument(f"{clean.source_name or 'document'}: no tokens")

    groups: list[list[str]] = []
    current: list[str] = []
    for tokens in _sentence_token_groups(all_tokens):
        if len(tokens) > chunk_size_limit:
            if current:
                groups.append(current)
                current = []
            for i in range(0, len(tokens), chunk_size_limit):
                part = tokens[i:i + chunk_size_limit]
                if len(part) == chunk_size_limit:
                    groups.append(part)
                else:
                    current = part
            continue
        if current and len(current) + len(tokens) > chunk_size_limit:
            groups.append(current)
            current = []
        current.extend(tokens)
    if current:
        groups.append(current)

    return [
        Chunk(index=i, text=" ".join(tokens), token_count=len(tokens))
        for i, tokens in enumerate(groups)
    ]
