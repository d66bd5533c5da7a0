"""HTML rendering: builder escaping, page validity, export parity."""

import posixpath
from pathlib import Path

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from prodoc.docdb import build_index
from prodoc.htmlgen import (
    Linker,
    RenderOptions,
    ServerUrls,
    StaticUrls,
    esc,
    export_static,
    h,
    render_dir_page,
    render_file_page,
    render_search_page,
    render_source_page,
    render_text_page,
    static_name,
)
from support.html_checks import assert_valid_page, normalize_live, text_content

LIVE = RenderOptions(live=True, edit_enabled=True)


class TestBuilder:
    def test_esc_covers_markup_characters(self):
        assert esc('<a href="x">&') == "&lt;a href=&quot;x&quot;&gt;&amp;"

    def test_string_children_are_escaped(self):
        assert h("p", "a < b").text == "<p>a &lt; b</p>"

    def test_html_children_pass_through(self):
        inner = h("b", "x")
        assert h("p", inner).text == "<p><b>x</b></p>"

    def test_cls_becomes_class(self):
        assert h("div", "x", cls="big").text == '<div class="big">x</div>'

    def test_underscore_attrs_become_hyphenated(self):
        assert 'data-generation="3"' in h("body", data_generation="3").text

    def test_attr_values_escaped(self):
        assert h("a", "t", href='x"y').text == '<a href="x&quot;y">t</a>'

    def test_void_elements_self_close(self):
        assert h("br").text == "<br/>"
        assert h("img", src="a.png").text == '<img src="a.png"/>'

    def test_none_children_skipped(self):
        assert h("p", None, "x", None).text == "<p>x</p>"

    def test_iterable_children_flattened(self):
        assert h("ul", (h("li", str(i)) for i in (1, 2))).text == (
            "<ul><li>1</li><li>2</li></ul>"
        )


class TestUrls:
    def test_server_urls_are_absolute(self):
        u = ServerUrls()
        assert u.doc_file("sub/x.pl") == "/doc/sub/x.pl"
        assert u.doc_dir("") == "/doc/"
        assert u.source("x.pl") == "/source/x.pl"
        assert u.asset("doc.css") == "/assets/doc.css"
        assert u.raw_file("shot.png") == "/file/shot.png"

    def test_server_urls_respect_base(self):
        u = ServerUrls(base="/prefix")
        assert u.doc_file("x.pl") == "/prefix/doc/x.pl"

    def test_server_urls_quote_spaces(self):
        assert " " not in ServerUrls().doc_file("a b.pl")

    def test_static_names(self):
        assert static_name("x.pl") == "x.html"
        assert static_name("sub/y.pl") == "sub/y.html"
        assert static_name("README.txt") == "README.txt.html"
        assert static_name("") == "index.html"

    def test_static_urls_are_relative_to_page_dir(self):
        u = StaticUrls("sub")
        assert u.doc_file("x.pl") == "../x.html"
        assert u.doc_file("sub/y.pl") == "y.html"
        assert u.source("sub/y.pl") == "y.src.html"
        assert u.asset("doc.css") == "../assets/doc.css"


class TestFilePage:
    def test_valid_document(self, corpus_index):
        assert_valid_page(render_file_page(corpus_index, "base64.pl", LIVE).html)

    def test_mode_header_is_contiguous(self, corpus_index):
        page = render_file_page(corpus_index, "base64.pl", LIVE)
        assert "base64(+Plain, -Encoded) is det" in page.html

    def test_pred_anchor_present(self, corpus_index):
        page = render_file_page(corpus_index, "base64.pl", LIVE)
        assert 'id="base64/2"' in page.html

    def test_undocumented_section_lists_missing_export(self, corpus_index):
        page = render_file_page(corpus_index, "hexutil.pl", LIVE)
        assert '<div class="undocumented">' in page.html
        assert "hex_pad/3" in page.html

    def test_generation_stamp(self, corpus_index):
        root = assert_valid_page(
            render_file_page(corpus_index, "base64.pl", LIVE).html)
        body = root.find("body")
        assert body.get("data-generation") == str(corpus_index.generation)
        spans = [el for el in root.iter("span")
                 if el.get("class") == "generation"]
        assert [s.text for s in spans] == [str(corpus_index.generation)]

    def test_unknown_file_raises(self, corpus_index):
        with pytest.raises(KeyError):
            render_file_page(corpus_index, "nope.pl", LIVE)


class TestZoom:
    def test_private_pred_hidden_by_default(self, corpus_index):
        page = render_file_page(corpus_index, "hexutil.pl", LIVE)
        assert "weight_code/2" not in page.html
        assert "public_only=false" in page.html

    def test_zoom_includes_private_with_marker_class(self, corpus_index):
        opts = RenderOptions(public_only=False, live=True)
        page = render_file_page(corpus_index, "hexutil.pl", opts)
        assert 'class="pred-doc private"' in page.html
        assert "public_only=true" in page.html

    def test_dir_page_has_no_zoom_link(self, corpus_index):
        assert "public_only=" not in render_dir_page(corpus_index, "", LIVE).html

    def test_static_pages_have_no_zoom_link(self, corpus_index):
        opts = RenderOptions(live=False)
        assert "public_only=" not in render_file_page(
            corpus_index, "hexutil.pl", opts).html


class TestChrome:
    def test_edit_forms_only_when_enabled(self, corpus_index):
        live = render_file_page(corpus_index, "base64.pl", LIVE).html
        plain = render_file_page(corpus_index, "base64.pl",
                                 RenderOptions(live=True)).html
        assert '<form class="edit-form"' in live
        assert "edit-form" not in plain

    def test_static_page_has_no_controls(self, corpus_index):
        html = render_file_page(corpus_index, "base64.pl",
                                RenderOptions(live=False)).html
        assert 'class="controls"' not in html
        assert "edit-form" not in html

    def test_live_page_has_search_and_reload(self, corpus_index):
        html = render_file_page(corpus_index, "base64.pl", LIVE).html
        assert 'action="/search"' in html
        assert 'action="/reload"' in html

    def test_script_always_included(self, corpus_index):
        for opts in (LIVE, RenderOptions(live=False)):
            html = render_file_page(corpus_index, "base64.pl", opts).html
            assert "ui.js" in html

    def test_source_link_in_both_modes(self, corpus_index):
        live = render_file_page(corpus_index, "base64.pl", LIVE).html
        static = render_file_page(corpus_index, "base64.pl",
                                  RenderOptions(live=False)).html
        assert "/source/base64.pl" in live
        assert "base64.src.html" in static


class TestOtherPages:
    def test_dir_page_lists_files_with_summaries(self, corpus_index):
        page = render_dir_page(corpus_index, "", LIVE)
        root = assert_valid_page(page.html)
        text = text_content(root)
        assert "base64.pl" in text
        assert "Base64 encoding and decoding" in text

    def test_dir_page_includes_readme(self, corpus_index):
        page = render_dir_page(corpus_index, "", LIVE)
        assert 'class="readme"' in page.html

    def test_source_page_colours(self, corpus_index):
        html = render_source_page(corpus_index, "hexutil.pl", LIVE).html
        assert_valid_page(html)
        assert 'class="call-undefined"' in html
        assert 'class="singleton-variable"' in html
        assert 'class="head-exported"' in html

    def test_source_page_structured_comments_boxed(self, corpus_index):
        html = render_source_page(corpus_index, "base64.pl", LIVE).html
        assert 'class="comment-doc module-doc"' in html
        assert 'class="comment-doc pred-doc"' in html

    def test_text_page(self, corpus_index):
        root = assert_valid_page(
            render_text_page(corpus_index, "README.txt", LIVE).html)
        assert "Two small codec modules" in text_content(root)

    def test_search_page(self, corpus_index):
        hits = corpus_index.search("base64", include_private=False)
        page = render_search_page(corpus_index, "base64", hits, LIVE)
        root = assert_valid_page(page.html)
        assert "base64/2" in text_content(root)

    def test_search_page_handles_markup_in_query(self, corpus_index):
        page = render_search_page(corpus_index, "<script>&", [], LIVE)
        root = assert_valid_page(page.html)
        assert "<script>&" in text_content(root)


class TestLinker:
    def test_known_pred_links_to_anchor(self, corpus_index):
        link = Linker(corpus_index, ServerUrls(), "").pred("base64/2")
        assert link == "/doc/base64.pl#base64/2"

    def test_dcg_alternate_resolves(self, corpus_index):
        assert Linker(corpus_index, ServerUrls(), "").pred("base64//1")

    def test_unknown_pred_has_no_link(self, corpus_index):
        assert Linker(corpus_index, ServerUrls(), "").pred("zz/9") is None

    def test_unresolved_reference_rendered_as_plain_code(self, tmp_path):
        (tmp_path / "m.pl").write_text(
            ":- module(m, [f/1]).\n\n"
            "%!  f(+X) is det.\n%\n%   Wraps ghost/3 somehow.\n\n"
            "f(_).\n")
        page = render_file_page(build_index(tmp_path), "m.pl", LIVE)
        assert '<code class="pred-undoc">ghost/3</code>' in page.html


class TestImages:
    @pytest.fixture()
    def tree(self, tmp_path):
        (tmp_path / "m.pl").write_text(
            ":- module(m, [f/1]).\n\n"
            "%!  f(+X) is det.\n%\n%   See [[shot.png]] for a diagram.\n\n"
            "f(_).\n")
        (tmp_path / "shot.png").write_bytes(b"\x89PNG fake")
        return tmp_path

    def test_live_image_served_from_file_route(self, tree):
        page = render_file_page(build_index(tree), "m.pl", LIVE)
        assert '<img src="/file/shot.png"' in page.html

    def test_static_export_copies_image(self, tree, tmp_path_factory):
        out = tmp_path_factory.mktemp("site")
        written = export_static(build_index(tree), out)
        assert "shot.png" in written
        assert (out / "shot.png").read_bytes() == b"\x89PNG fake"
        assert '<img src="shot.png"' in (out / "m.html").read_text()


def _page_with_body(tmp_path: Path, body: str) -> str:
    lines = ["%!  frob(+X) is det.", "%"]
    for ln in body.split("\n"):
        lines.append(("%   " + ln).rstrip() if ln else "%")
    (tmp_path / "f.pl").write_text(
        ":- module(f, [frob/1]).\n\n" + "\n".join(lines) + "\nfrob(_).\n")
    return render_file_page(build_index(tmp_path), "f.pl", LIVE).html


class TestEscaping:
    body_text = st.text(
        alphabet="<>&*=_|[]$ @abcz\n\"'%{}-/.:!`0", min_size=0, max_size=160)

    @given(body=body_text)
    @settings(max_examples=120, deadline=None,
              suppress_health_check=[HealthCheck.function_scoped_fixture])
    def test_fuzzed_bodies_render_to_wellformed_pages(self, tmp_path, body):
        html = _page_with_body(tmp_path, body + "\n\nmark <zqx> & not a tag")
        root = assert_valid_page(html)
        assert not any(el.tag == "zqx" for el in root.iter())
        assert "<zqx>" in text_content(root)

    def test_markup_in_summary_escaped_on_dir_page(self, tmp_path):
        (tmp_path / "m.pl").write_text(
            ":- module(m, [f/1]).\n\n"
            "%!  f(+X) is det.\n%\n%   Uses <angle> & co.\n\nf(_).\n")
        root = assert_valid_page(render_dir_page(build_index(tmp_path),
                                                 "", LIVE).html)
        assert "<angle> & co" in text_content(root)


@pytest.fixture(scope="module")
def site(tmp_path_factory, corpus_index):
    out = tmp_path_factory.mktemp("site")
    return out, export_static(corpus_index, out)


class TestStaticExport:
    def test_expected_files_written(self, site):
        out, written = site
        for rel in ("index.html", "base64.html", "base64.src.html",
                    "hexutil.html", "hexutil.src.html", "README.txt.html",
                    "assets/doc.css", "assets/ui.js"):
            assert rel in written
            assert (out / rel).is_file()

    def test_written_list_sorted(self, site):
        assert list(site[1]) == sorted(site[1])

    def test_all_pages_valid(self, site):
        out, written = site
        for rel in written:
            if rel.endswith(".html"):
                assert_valid_page((out / rel).read_text())

    def test_links_resolve_within_site(self, site):
        out, written = site
        for rel in written:
            if not rel.endswith(".html"):
                continue
            root = assert_valid_page((out / rel).read_text())
            here = posixpath.dirname(rel)
            for el in root.iter():
                for attr in ("href", "src", "action"):
                    url = el.get(attr)
                    if url is None or url.startswith(("#", "http", "?")):
                        continue
                    target = posixpath.normpath(
                        posixpath.join(here, url.partition("#")[0]))
                    assert (out / target).is_file(), f"{rel}: broken {url}"

    def test_parity_with_normalized_live_pages(self, site, corpus_index):
        out, _ = site
        cases = [("base64.pl", render_file_page, ""),
                 ("hexutil.pl", render_file_page, ""),
                 ("README.txt", render_text_page, ""),
                 ("", render_dir_page, "")]
        for rel, fn, page_dir in cases:
            live = fn(corpus_index, rel, LIVE).html
            static = (out / static_name(rel)).read_text()
            assert normalize_live(live, page_dir) == static, rel

    def test_source_parity(self, site, corpus_index):
        out, _ = site
        for rel in ("base64.pl", "hexutil.pl"):
            live = render_source_page(corpus_index, rel, LIVE).html
            static = (out / (rel[:-3] + ".src.html")).read_text()
            assert normalize_live(live, "") == static
