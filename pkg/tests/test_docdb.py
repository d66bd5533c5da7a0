"""Documentation index: collection, search, reload."""

import os

import pytest

from prodoc.docdb import build_index, reload_index


class TestCollection:
    def test_files_found(self, corpus_index):
        assert set(corpus_index.files) == {"base64.pl", "hexutil.pl"}
        assert set(corpus_index.text_files) == {"README.txt"}

    def test_module_metadata(self, corpus_index):
        mod = corpus_index.file("base64.pl").module
        assert mod.module_name == "base64"
        assert mod.title == "Base64 encoding and decoding"
        assert mod.exports == ("base64/2", "base64//1")

    def test_pred_docs_in_line_order(self, corpus_index):
        preds = corpus_index.file("base64.pl").preds
        assert [p.indicator for p in preds] == ["base64/2", "base64//1"]
        assert preds[0].line < preds[1].line

    def test_modes_attached(self, corpus_index):
        pd = corpus_index.file("base64.pl").preds[0]
        assert [m.render() for m in pd.modes] == [
            "base64(+Plain, -Encoded) is det",
            "base64(-Plain, +Encoded) is det"]

    def test_public_follows_exports(self, corpus_index):
        flags = {p.indicator: p.is_public
                 for p in corpus_index.file("hexutil.pl").preds}
        assert flags == {"hex_bytes/2": True, "hex_codes/2": True,
                         "weight_code/2": False}

    def test_all_public_without_module(self, tmp_path):
        (tmp_path / "loose.pl").write_text(
            "%% go(+X) is det.\n%\n%  Runs.\n\ngo(X) :- write(X).\n")
        idx = build_index(tmp_path)
        assert idx.file("loose.pl").preds[0].is_public

    def test_summary_first_sentence(self, corpus_index):
        pd = corpus_index.file("base64.pl").preds[0]
        assert pd.summary.text.startswith("Translate between a plain")
        assert pd.summary.text.endswith("encoded form.")

    def test_find_pred_direct_and_alternate(self, corpus_index):
        entry, pd = corpus_index.find_pred("base64//1")
        assert pd.indicator == "base64//1"
        # name/arity spelling of a grammar rule resolves to the // entry
        entry, pd = corpus_index.find_pred("base64/3")
        assert pd.indicator == "base64//1"
        assert corpus_index.find_pred("nope/9") is None

    def test_find_definition_line(self, corpus_index):
        entry, line = corpus_index.find_definition("hex_bytes/2")
        assert entry.path == "hexutil.pl"
        assert entry.text.splitlines()[line - 1].startswith("hex_bytes(")

    def test_undocumented_exports(self, corpus_index):
        assert corpus_index.undocumented_exports("base64.pl") == ()
        assert corpus_index.undocumented_exports("hexutil.pl") == (
            "hex_pad/3",)

    def test_undocumented_unknown_file_raises(self, corpus_index):
        with pytest.raises(KeyError):
            corpus_index.undocumented_exports("missing.pl")

    def test_readme_lookup(self, corpus_index):
        assert corpus_index.readme_for("") == "README.txt"
        assert corpus_index.readme_for("sub") is None

    def test_hidden_directories_skipped(self, tmp_path):
        (tmp_path / ".git").mkdir()
        (tmp_path / ".git" / "junk.pl").write_text("x.\n")
        (tmp_path / "real.pl").write_text("y.\n")
        assert set(build_index(tmp_path).files) == {"real.pl"}

    def test_unreadable_tree_raises(self, tmp_path):
        with pytest.raises(OSError):
            build_index(tmp_path / "absent")


class TestSearch:
    def test_module_and_preds_ranked(self, corpus_index):
        hits = corpus_index.search("base64")
        assert [(h.kind, h.target) for h in hits[:3]] == [
            ("module", "base64.pl"),
            ("pred", "base64//1"),
            ("pred", "base64/2")]
        assert hits[0].score > hits[1].score

    def test_argument_and_summary_words(self, corpus_index):
        hits = corpus_index.search("bytes")
        by_target = {h.target: h.score for h in hits}
        # name match outranks summary-only match
        assert by_target["hex_bytes/2"] > by_target["hex_codes/2"]

    def test_multiple_words_add_up(self, corpus_index):
        one = {h.target: h.score for h in corpus_index.search("hex")}
        two = {h.target: h.score
               for h in corpus_index.search("hex bytes")}
        assert two["hex_bytes/2"] > one["hex_bytes/2"]

    def test_deterministic_order(self, corpus_index):
        first = [(h.target, h.score) for h in corpus_index.search("encode")]
        for _ in range(5):
            assert [(h.target, h.score)
                    for h in corpus_index.search("encode")] == first

    def test_private_filter(self, corpus_index):
        all_hits = corpus_index.search("weight")
        public = corpus_index.search("weight", include_private=False)
        assert any(h.target == "weight_code/2" for h in all_hits)
        assert not any(h.target == "weight_code/2" for h in public)

    def test_no_matches(self, corpus_index):
        assert corpus_index.search("qwertyuiop") == []


class TestReload:
    def test_generation_increments(self, corpus_copy):
        idx = build_index(corpus_copy)
        assert idx.generation == 1
        idx2 = reload_index(idx)
        assert idx2.generation == 2

    def test_unchanged_files_not_reparsed(self, corpus_copy):
        idx = build_index(corpus_copy)
        idx2 = reload_index(idx)
        assert idx2.parsed_files == frozenset()
        assert idx2.file("base64.pl") is idx.file("base64.pl")

    def test_touched_file_reparsed(self, corpus_copy):
        idx = build_index(corpus_copy)
        target = corpus_copy / "hexutil.pl"
        st = target.stat()
        os.utime(target, (st.st_atime, st.st_mtime + 5))
        idx2 = reload_index(idx)
        assert idx2.parsed_files == frozenset({"hexutil.pl"})

    def test_edit_visible_after_reload(self, corpus_copy):
        idx = build_index(corpus_copy)
        target = corpus_copy / "hexutil.pl"
        text = target.read_text().replace(
            "Relate a hexadecimal atom", "Connect a hexadecimal atom")
        target.write_text(text)
        st = target.stat()
        os.utime(target, (st.st_atime, st.st_mtime + 5))
        idx2 = reload_index(idx)
        pd = idx2.file("hexutil.pl").preds[0]
        assert pd.summary.text.startswith("Connect")

    def test_new_file_appears(self, corpus_copy):
        idx = build_index(corpus_copy)
        (corpus_copy / "extra.pl").write_text("z.\n")
        idx2 = reload_index(idx)
        assert "extra.pl" in idx2.files
        assert "extra.pl" not in idx.files  # old snapshot untouched

    def test_deleted_file_disappears(self, corpus_copy):
        idx = build_index(corpus_copy)
        (corpus_copy / "hexutil.pl").unlink()
        idx2 = reload_index(idx)
        assert "hexutil.pl" not in idx2.files
