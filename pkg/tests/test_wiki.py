"""Wiki dialect parsing: blocks, fonts, autolinks, argument refs."""

from hypothesis import given, settings
from hypothesis import strategies as st

from prodoc.wiki import (
    ArgRef,
    Bold,
    Code,
    CodeBlock,
    FileLink,
    Image,
    Italic,
    Paragraph,
    PredLink,
    Text,
    WikiList,
    parse_inlines,
    parse_wiki,
)


class TestInlineFonts:
    def test_single_word_fonts(self):
        nodes = parse_inlines("has *bold* _ital_ =code= words")
        assert Bold((Text("bold"),)) in nodes
        assert Italic((Text("ital"),)) in nodes
        assert Code("code") in nodes

    def test_delimited_fonts_take_phrases(self):
        nodes = parse_inlines("*|two words|* and =|a = b|=")
        assert nodes[0] == Bold((Text("two words"),))
        assert Code("a = b") in nodes

    def test_mid_word_stars_stay_text(self):
        assert parse_inlines("not*bold* here") == [Text("not*bold* here")]

    def test_no_html_passthrough(self):
        # markup characters are data, nothing is interpreted
        assert parse_inlines("<b>x</b>") == [Text("<b>x</b>")]


class TestAutolinks:
    def test_name_arity(self):
        nodes = parse_inlines("see base64/2 here")
        assert PredLink("base64", 2, False) in nodes

    def test_dcg_arity(self):
        nodes = parse_inlines("see gram//1 here")
        link = [n for n in nodes if isinstance(n, PredLink)][0]
        assert (link.name, link.arity, link.dcg) == ("gram", 1, True)
        assert link.indicator == "gram//1"

    def test_quoted_off(self):
        # inside =..= the indicator is code, not a link
        nodes = parse_inlines("=base64/2=")
        assert nodes == [Code("base64/2")]

    def test_file_reference(self):
        assert FileLink("util.pl") in parse_inlines("read util.pl then")

    def test_image_reference(self):
        assert Image("shot.png", True) in parse_inlines("[[shot.png]]")


class TestArgRefs:
    def test_known_argument_marked(self):
        nodes = parse_inlines("takes X and others", ("X",))
        assert ArgRef("X") in nodes

    def test_unknown_name_stays_text(self):
        nodes = parse_inlines("takes X and Y", ("X",))
        assert ArgRef("Y") not in nodes
        assert ArgRef("X") in nodes

    def test_multi_occurrence(self):
        nodes = parse_inlines("X then X", ("X",))
        assert nodes.count(ArgRef("X")) == 2


class TestBlocks:
    def test_paragraph_split(self):
        doc = parse_wiki("one\n\ntwo")
        assert [type(b) for b in doc.blocks] == [Paragraph, Paragraph]

    def test_bulleted_list(self):
        doc = parse_wiki("  - alpha\n  - beta\n")
        lst = doc.blocks[0]
        assert isinstance(lst, WikiList) and lst.kind == "bulleted"
        assert len(lst.items) == 2

    def test_numbered_list(self):
        doc = parse_wiki("  1. alpha\n  2. beta\n")
        assert doc.blocks[0].kind == "numbered"

    def test_description_list(self):
        doc = parse_wiki("  $ key : meaning\n")
        lst = doc.blocks[0]
        assert lst.kind == "description"
        assert lst.items[0].term == (Text("key"),)

    def test_code_fence_byte_exact(self):
        raw = "?- run(X).\nX  =  7.   % keeps   spacing"
        doc = parse_wiki(f"intro:\n\n==\n{raw}\n==\n")
        fences = [b for b in doc.blocks if isinstance(b, CodeBlock)]
        assert len(fences) == 1
        assert fences[0].text == raw

    def test_fence_not_parsed_for_markup(self):
        doc = parse_wiki("==\n*not bold* base64/2\n==\n")
        assert doc.blocks[0].text == "*not bold* base64/2"


class TestRobustness:
    @given(st.text(alphabet="ab *_=|/[]<>&.-$\n 12X", max_size=80))
    @settings(max_examples=300)
    def test_never_raises_and_text_is_preserved(self, text):
        doc = parse_wiki(text)
        assert doc is not None
        # inline parsing of arbitrary text must also never raise
        parse_inlines(text)
