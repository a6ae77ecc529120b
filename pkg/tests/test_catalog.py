import pytest

from groupcovers import (
    DuplicateName,
    OrderMismatch,
    ParseError,
    build_catalog,
    build_entry,
    bundled_catalog_text,
    parse_catalog,
)


def test_perm_record():
    entries = parse_catalog("group S3\nperm 3; (1 2 3); (1 2)\n")
    assert len(entries) == 1
    built = build_catalog(entries)
    assert built["S3"].order == 6


def test_preset_record():
    entries = parse_catalog("group Q8\npreset quaternion 3\n")
    assert build_catalog(entries)["Q8"].order == 8


def test_product_references_earlier_entry():
    text = """\
group C2
preset cyclic 2

group V4
preset product C2 C2
order 4
"""
    built = build_catalog(parse_catalog(text))
    assert built["V4"].order == 4
    assert not built["V4"].is_cyclic


def test_comments_and_blank_lines():
    text = """\
# leading comment

group C6   # trailing comment
preset cyclic 6
order 6    # checked after building


# another comment between records
group S3
perm 3; (1 2 3); (1 2)
"""
    entries = parse_catalog(text)
    assert [e.name for e in entries] == ["C6", "S3"]
    assert entries[0].expected_order == 6
    assert entries[1].expected_order is None


def test_order_line_optional_and_checked():
    entries = parse_catalog("group C4\npreset cyclic 4\norder 5\n")
    with pytest.raises(OrderMismatch) as info:
        build_catalog(entries)
    assert "C4" in str(info.value)
    assert "5" in str(info.value) and "4" in str(info.value)


class TestParseErrors:
    def check(self, text, lineno, fragment=None):
        with pytest.raises(ParseError) as info:
            parse_catalog(text)
        assert info.value.line == lineno
        if fragment:
            assert fragment in str(info.value)

    def test_record_must_start_with_group(self):
        self.check("preset cyclic 4\n", 1)

    def test_group_needs_a_name(self):
        self.check("group\npreset cyclic 4\n", 1)

    def test_missing_construction(self):
        self.check("group C4\n\ngroup C2\npreset cyclic 2\n", 1)

    def test_two_constructions(self):
        self.check("group X\npreset cyclic 4\nperm 3; (1 2 3)\n", 3)

    def test_duplicate_order_line(self):
        self.check("group C4\npreset cyclic 4\norder 4\norder 4\n", 4)

    def test_order_not_a_number(self):
        self.check("group C4\npreset cyclic 4\norder four\n", 3)

    def test_unknown_preset(self):
        self.check("group X\npreset wreath 2 2\n", 2)

    def test_wrong_preset_arity(self):
        self.check("group X\npreset cyclic 4 5\n", 2)
        self.check("group X\npreset product C2\n", 2)

    def test_non_numeric_preset_arg_fails_at_build(self):
        # arity is checked while parsing; numeric validity at build time
        entries = parse_catalog("group X\npreset cyclic two\n")
        with pytest.raises(ParseError) as info:
            build_catalog(entries)
        assert info.value.line == 1

    def test_bad_perm_degree(self):
        self.check("group X\nperm zero; (1 2)\n", 2)

    def test_line_numbers_skip_comments(self):
        text = "# one\n# two\ngroup X\npreset nope 1\n"
        self.check(text, 4)

    def test_trailing_junk_line(self):
        self.check("group C4\npreset cyclic 4\nextra stuff\n", 3)


def test_duplicate_name():
    text = "group A\npreset cyclic 2\n\ngroup A\npreset cyclic 3\n"
    with pytest.raises(DuplicateName):
        parse_catalog(text)


def test_unknown_product_reference():
    text = "group V4\npreset product C2 C2\n"
    entries = parse_catalog(text)
    with pytest.raises(ParseError) as info:
        build_catalog(entries)
    assert info.value.line == 1


def test_forward_product_reference_fails():
    text = """\
group V4
preset product C2 C2

group C2
preset cyclic 2
"""
    with pytest.raises(ParseError):
        build_catalog(parse_catalog(text))


def test_build_entry_single():
    entries = parse_catalog("group D4\npreset dihedral 4\norder 8\n")
    g = build_entry(entries[0], {})
    assert g.order == 8
    assert g.name == "D4"


def test_malformed_cycles_surface_at_build():
    from groupcovers import MalformedCycle

    entries = parse_catalog("group X\nperm 3; (1 2 99)\n")
    with pytest.raises(MalformedCycle):
        build_catalog(entries)


def test_bundled_catalog(corpus_entries):
    assert len(corpus_entries) == 98
    names = [e.name for e in corpus_entries]
    assert len(set(names)) == 98
    # every entry in the shipped catalog carries an order assertion
    assert all(e.expected_order is not None for e in corpus_entries)
    assert bundled_catalog_text().count("group ") >= 98
