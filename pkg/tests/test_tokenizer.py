"""Scanner behaviour, identical across both kernels."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prodoc.reader import tokenize
from prodoc.reader import _scan_py
from prodoc.reader.errors import (
    BadCharacter,
    UnterminatedBlockComment,
    UnterminatedQuoted,
)

try:
    from prodoc.reader import _scan_c
except ImportError:
    _scan_c = None

BACKENDS = [pytest.param(_scan_py.scan, id="pure")]
if _scan_c is not None:
    BACKENDS.append(pytest.param(_scan_c.scan, id="compiled"))


@pytest.fixture(params=BACKENDS)
def scan(request):
    return request.param


def kinds(text, scan):
    return [t.kind for t in tokenize(text, scan=scan)]


def texts(text, scan):
    return [t.text for t in tokenize(text, scan=scan)]


class TestBasicTokens:
    def test_clause(self, scan):
        toks = tokenize("foo(X, 1).", scan=scan)
        assert [(t.kind, t.text) for t in toks] == [
            ("atom", "foo"), ("open", "("), ("variable", "X"),
            ("comma", ","), ("integer", "1"), ("close", ")"), ("end", "."),
        ]

    def test_variables(self, scan):
        assert kinds("X _x _ Abc", scan) == ["variable"] * 4

    def test_symbol_atoms_maximal_munch(self, scan):
        assert texts(":- --> == =.. #### @<", scan) == [
            ":-", "-->", "==", "=..", "####", "@<"]

    def test_solo_chars(self, scan):
        assert kinds("! ; , |", scan) == ["atom", "atom", "comma", "bar"]

    def test_brackets(self, scan):
        assert kinds("( ) [ ] { }", scan) == [
            "open", "close", "open_list", "close_list",
            "open_curly", "close_curly"]

    def test_quoted_atom(self, scan):
        assert texts("'hello world'", scan) == ["'hello world'"]
        assert kinds("'hello world'", scan) == ["atom"]

    def test_quoted_atom_doubled_quote(self, scan):
        assert texts("'it''s'", scan) == ["'it''s'"]

    def test_quoted_atom_escape(self, scan):
        assert texts(r"'a\'b'", scan) == [r"'a\'b'"]

    def test_string(self, scan):
        assert kinds('"hi there"', scan) == ["string"]

    def test_backquote(self, scan):
        assert kinds("`abc`", scan) == ["string"]


class TestNumbers:
    def test_integers(self, scan):
        assert kinds("0 7 123456", scan) == ["integer"] * 3

    def test_radix_integers(self, scan):
        assert texts("0x1F 0o17 0b1011", scan) == ["0x1F", "0o17", "0b1011"]
        assert kinds("0x1F 0o17 0b1011", scan) == ["integer"] * 3

    def test_char_code(self, scan):
        assert texts("0'a 0'+ 0'\\n", scan) == ["0'a", "0'+", "0'\\n"]
        assert kinds("0'a", scan) == ["integer"]

    def test_char_code_doubled_quote(self, scan):
        # 0''' is the code of the quote itself, written doubled
        assert texts("0'''", scan) == ["0'''"]

    def test_char_code_lone_quote_rejected(self, scan):
        with pytest.raises(BadCharacter):
            tokenize("0''", scan=scan)

    def test_floats(self, scan):
        assert kinds("1.5 0.25 2.0e10 3.14E-2", scan) == ["float"] * 4

    def test_float_needs_fraction_digits(self, scan):
        # "1." is integer then end, not a float
        assert kinds("1.", scan) == ["integer", "end"]

    def test_integer_then_symbolic_dot(self, scan):
        assert kinds("1.foo", scan) == ["integer", "punct", "atom"]


class TestEndToken:
    def test_dot_before_layout(self, scan):
        assert kinds("a .", scan) == ["atom", "end"]
        assert kinds("a.\n", scan) == ["atom", "end"]

    def test_dot_at_eof(self, scan):
        assert kinds("a.", scan) == ["atom", "end"]

    def test_dot_before_comment(self, scan):
        assert kinds("a.% c", scan) == ["atom", "end", "comment_line"]

    def test_dot_run_is_symbolic(self, scan):
        assert texts("...", scan) == ["..."]
        assert kinds("...", scan) == ["punct"]


class TestComments:
    def test_line_comment(self, scan):
        assert kinds("% hi\nfoo.", scan) == ["comment_line", "atom", "end"]

    def test_block_comment(self, scan):
        assert kinds("/* x */ foo.", scan) == [
            "comment_block", "atom", "end"]

    def test_nested_stars(self, scan):
        assert texts("/** doc **/", scan) == ["/** doc **/"]


class TestErrors:
    def test_unterminated_quote(self, scan):
        with pytest.raises(UnterminatedQuoted):
            tokenize("'abc", scan=scan)

    def test_unterminated_block_comment(self, scan):
        with pytest.raises(UnterminatedBlockComment):
            tokenize("/* abc", scan=scan)

    def test_bad_character(self, scan):
        with pytest.raises(BadCharacter) as err:
            tokenize("foo \x01", scan=scan)
        assert err.value.span.start == 4

    def test_error_span_line(self, scan):
        with pytest.raises(UnterminatedQuoted) as err:
            tokenize("a.\n'oops", scan=scan)
        assert err.value.span.line_start == 2


_PROLOGISH = st.text(
    alphabet="ab X_,()[]{}|'\"%/*+-.:=<>!;\\\n\t 0129e",
    max_size=60,
)


class TestReconstruction:
    @given(text=_PROLOGISH)
    @settings(max_examples=300)
    def test_tokens_cover_text_exactly(self, text):
        """Joining token texts with the inter-token gaps restores the
        input, and gaps hold only layout."""
        try:
            toks = tokenize(text)
        except Exception:
            return
        pos = 0
        for t in toks:
            gap = text[pos:t.span.start]
            assert gap.strip() == ""
            assert text[t.span.start:t.span.end] == t.text
            pos = t.span.end
        assert text[pos:].strip() == ""

    @given(text=_PROLOGISH)
    @settings(max_examples=300)
    def test_kernels_agree(self, text):
        if _scan_c is None:
            pytest.skip("compiled kernel not built")
        try:
            pure = _scan_py.scan(text)
            pure_err = None
        except ValueError as exc:
            pure, pure_err = None, exc.args[0]
        try:
            compiled = _scan_c.scan(text)
            compiled_err = None
        except ValueError as exc:
            compiled, compiled_err = None, exc.args[0]
        assert pure_err == compiled_err
        if pure is not None:
            assert list(pure) == list(compiled)
