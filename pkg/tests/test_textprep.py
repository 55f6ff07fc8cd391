import random

import pytest

from skillmap.errors import (
    EmptyDocument,
    EncodingError,
    FormatMismatch,
    MalformedMarkup,
    OversizeDocument,
    UnsupportedFormat,
)
from skillmap.textprep import (
    Chunk,
    CleanText,
    PrepConfig,
    RawDocument,
    chunk_text,
    clean_text,
    extract_text,
    validate_document,
)


def make_doc(data, fmt="txt", name="doc"):
    return RawDocument(name=name, declared_format=fmt, data=data)


class TestValidateDocument:
    def test_accepts_small_txt(self):
        doc = make_doc(b"hello you")
        assert validate_document(doc) is doc

    def test_html_sniff_mismatch(self):
        with pytest.raises(FormatMismatch):
            validate_document(make_doc(b"plain words", fmt="html"))

    def test_html_with_leading_whitespace_ok(self):
        doc = make_doc(b"  \n <p>x</p>", fmt="html")
        assert validate_document(doc) is doc

    def test_oversize(self):
        config = PrepConfig(max_size_bytes=16)
        with pytest.raises(OversizeDocument):
            validate_document(make_doc(b"x" * 17), config)

    def test_unsupported_format(self):
        with pytest.raises(UnsupportedFormat):
            validate_document(make_doc(b"x", fmt="pdf"))

    def test_bad_utf8(self):
        with pytest.raises(EncodingError):
            validate_document(make_doc(b"\xff\xfe\x00x"))

    def test_bom_stripped(self):
        doc = make_doc(b"\xef\xbb\xbfhello")
        validate_document(doc)
        assert extract_text(doc) == "hello"


class TestExtractText:
    def test_txt_identity(self):
        assert extract_text(make_doc(b"abc")) == "abc"

    def test_pre_extracted_identity(self):
        assert extract_text(make_doc(b"one\ntwo", fmt="pre_extracted")) == "one\ntwo"

    def test_html_entities_and_script_drop(self):
        doc = make_doc(b"<p>A&amp;B</p><script>x</script><p>C</p>", fmt="html")
        assert extract_text(doc) == "A&B\nC"

    def test_html_drops_head_and_style(self):
        doc = make_doc(
            b"<html><head><title>t</title><style>p{}</style></head>"
            b"<body><p>body text</p></body></html>",
            fmt="html",
        )
        assert extract_text(doc) == "body text"

    def test_xml_text_nodes_in_order(self):
        doc = make_doc(b"<r><a>x</a><b>y</b></r>", fmt="xml")
        assert extract_text(doc) == "x\ny"

    def test_xml_malformed(self):
        with pytest.raises(MalformedMarkup):
            extract_text(make_doc(b"<r><a>x</r>", fmt="xml"))


class TestCleanText:
    def test_citation_marker_removed_digits_kept(self):
        result = clean_text("growth [12] rose 5%")
        assert result.text == "growth rose 5%"
        assert result.removed_artifact_count == 1

    def test_multi_number_marker(self):
        assert clean_text("seen [3,4,17] here").text == "seen here"

    def test_four_digit_marker_preserved(self):
        # looks like a year fragment, not a citation
        assert "[2021" in clean_text("treaty of [2021 text").text

    def test_newline_collapse(self):
        assert clean_text("a\n\n\n\nb").text == "a\n\nb"

    def test_empty(self):
        result = clean_text("")
        assert result.text == ""
        assert result.removed_artifact_count == 0

    def test_footnote_digit_after_period(self):
        assert clean_text("the end.3 Next sentence.").text == "the end. Next sentence."

    def test_decimal_numbers_untouched(self):
        assert clean_text("rate was 3.5 percent").text == "rate was 3.5 percent"

    def test_article_references_preserved(self):
        assert "Article 12" in clean_text("under Article 12 of the act").text

    def test_control_characters_stripped(self):
        result = clean_text("a\x00\x07b")
        assert result.text == "ab"
        assert result.removed_artifact_count == 2

    def test_idempotent(self):
        samples = [
            "growth [12] rose 5%\n\n\n\nnext.2 line",
            "  spaced\t\tout  text  ",
            "plain",
        ]
        for s in samples:
            once = clean_text(s).text
            assert clean_text(once).text == once

    def test_digit_preservation_outside_markers(self):
        raw = "keep 2024 and 15% but drop [42] marker"
        cleaned = clean_text(raw).text
        digits = lambda s: [c for c in s if c.isdigit()]
        assert digits(cleaned) == digits(raw.replace("[42]", ""))


class TestChunkText:
    def make(self, text):
        return CleanText(text=text, source_name="t", removed_artifact_count=0)

    def test_small_text_single_chunk(self):
        chunks = chunk_text(self.make("one two three four five"))
        assert len(chunks) == 1
        assert chunks[0].token_count == 5

    def test_two_sentences_cannot_merge(self):
        s1 = " ".join(["alpha"] * 79) + " end."
        s2 = " ".join(["beta"] * 79) + " stop."
        chunks = chunk_text(self.make(s1 + " " + s2), 120)
        assert [c.token_count for c in chunks] == [80, 80]

    def test_long_sentence_hard_split(self):
        text = " ".join(["tok"] * 250)
        chunks = chunk_text(self.make(text), 120)
        assert [c.token_count for c in chunks] == [120, 120, 10]

    def test_empty_raises(self):
        with pytest.raises(EmptyDocument):
            chunk_text(self.make("   "))

    def test_limit_validation(self):
        with pytest.raises(ValueError):
            chunk_text(self.make("a b c"), 4)

    def test_coverage_and_bound_random(self):
        rng = random.Random(7)
        words = ["alpha", "beta", "gamma", "delta.", "eps!", "zeta?", "x1", "y.z"]
        for _ in range(50):
            text = " ".join(rng.choice(words) for _ in range(rng.randint(1, 400)))
            limit = rng.randint(8, 150)
            chunks = chunk_text(self.make(text), limit)
            rebuilt = [t for c in chunks for t in c.text.split()]
            assert rebuilt == text.split()
            assert all(1 <= c.token_count <= limit for c in chunks)
            assert [c.index for c in chunks] == list(range(len(chunks)))
            assert all(c.token_count == len(c.text.split()) for c in chunks)
