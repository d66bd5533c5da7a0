"""Formal header parsing: modes, types, determinism, rejections."""

import pytest

from prodoc.headers import (
    HeaderSyntaxError,
    ModuleHeader,
    parse_formal_header,
)
from support import header_cases


class TestAcceptedHeaders:
    @pytest.mark.parametrize("text,rendered",
                             sorted(header_cases.ACCEPT.items()))
    def test_accepts(self, text, rendered):
        modes = parse_formal_header(text)
        assert len(modes) == 1
        assert modes[0].render() == rendered

    def test_two_modes_in_one_header(self):
        modes = parse_formal_header(
            "conv(+In, -Out) is det.\nconv(-In, +Out) is det.")
        assert [m.render() for m in modes] == [
            "conv(+In, -Out) is det", "conv(-In, +Out) is det"]

    def test_indicator(self):
        modes = parse_formal_header("foo(+X, -Y) is det.")
        assert modes[0].indicator == "foo/2"

    def test_dcg_indicator(self):
        modes = parse_formal_header("gram(+X)// is det.")
        assert modes[0].indicator == "gram//1"
        assert modes[0].is_dcg

    def test_argspec_fields(self):
        modes = parse_formal_header("foo(+Name:atom) is semidet.")
        arg = modes[0].args[0]
        assert (arg.mode, arg.name) == ("+", "Name")
        assert arg.type.name == "atom"  # the type is carried as a term
        assert modes[0].determinism == "semidet"

    def test_unmarked_argument_has_no_mode(self):
        modes = parse_formal_header("foo(Plain).")
        assert modes[0].args[0].mode is None


class TestRejectedHeaders:
    @pytest.mark.parametrize("text,reason",
                             sorted(header_cases.REJECT.items()))
    def test_rejects(self, text, reason):
        with pytest.raises(HeaderSyntaxError) as err:
            parse_formal_header(text)
        assert err.value.reason == reason


class TestModuleHeaders:
    def test_module_title(self):
        parsed = parse_formal_header("<module> Utilities for frobnication")
        assert isinstance(parsed, ModuleHeader)
        assert parsed.title == "Utilities for frobnication"
