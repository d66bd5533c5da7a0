"""Predicates assumed to exist without a local definition.

Calls that resolve neither to a clause in the file nor to this table are
flagged as undefined by the source colourer.  The table covers the ISO
core plus the common library predicates seen in everyday code; it is data,
not behaviour, and can be extended freely.
"""

BUILTIN_PREDICATES = frozenset((
    # control
    "true/0", "fail/0", "false/0", "!/0", "\\+/1", "not/1",
    "call/1", "call/2", "call/3", "call/4", "call/5", "call/6", "call/7",
    "call/8", "findall/3", "findall/4", "bagof/3", "setof/3", "forall/2",
    "aggregate_all/3", "once/1", "ignore/1", "catch/3", "throw/1",
    "halt/0", "halt/1", "apply/2",
    # unification and comparison
    "=/2", "\\=/2", "==/2", "\\==/2", "@</2", "@>/2", "@=</2", "@>=/2",
    "compare/3", "unify_with_occurs_check/2", "subsumes_term/2",
    # type tests
    "var/1", "nonvar/1", "atom/1", "number/1", "integer/1", "float/1",
    "atomic/1", "compound/1", "callable/1", "is_list/1", "ground/1",
    "is_dict/1", "is_assoc/1", "string/1", "blob/2",
    # term construction and inspection
    "functor/3", "arg/3", "=../2", "copy_term/2", "setarg/3", "nb_setarg/3",
    "term_variables/2", "numbervars/3", "term_to_atom/2",
    # arithmetic
    "is/2", "=:=/2", "=\\=/2", "</2", ">/2", "=</2", ">=/2",
    "succ/2", "plus/3", "between/3",
    # atoms, strings, chars
    "atom_codes/2", "atom_chars/2", "atom_length/2", "atom_concat/3",
    "atom_number/2", "atom_string/2", "atom_to_term/3", "char_code/2",
    "number_codes/2", "number_chars/2", "number_string/2",
    "sub_atom/5", "sub_string/5", "upcase_atom/2", "downcase_atom/2",
    "string_chars/2", "string_codes/2", "string_concat/3", "string_length/2",
    "string_lower/2", "string_upper/2", "string_to_atom/2", "split_string/4",
    "term_string/2", "text_concat/3", "format_atom/3", "with_output_to/2",
    # lists
    "length/2", "append/3", "member/2", "memberchk/2", "reverse/2",
    "nth0/3", "nth1/3", "last/2", "msort/2", "sort/2", "sort/4",
    "keysort/2", "predsort/3", "permutation/2", "sum_list/2", "max_list/2",
    "min_list/2", "list_to_set/2", "exclude/3", "include/3", "partition/4",
    "maplist/2", "maplist/3", "maplist/4", "maplist/5", "maplist/6",
    "foldl/4", "foldl/5", "foldl/6", "numlist/3", "select/3", "selectchk/3",
    "subtract/3", "intersection/3", "union/3", "delete/3", "flatten/2",
    "pairs_keys_values/3", "pairs_keys/2", "pairs_values/2",
    # database
    "assert/1", "asserta/1", "assertz/1", "retract/1", "retractall/1",
    "abolish/1", "clause/2", "predicate_property/2", "current_predicate/1",
    "current_predicate/2", "nb_setval/2", "nb_getval/2", "b_setval/2",
    "b_getval/2", "recorda/3", "recordz/3", "recorded/3", "erase/1",
    # grammars
    "phrase/2", "phrase/3",
    # input/output
    "read/1", "read_term/2", "read_term/3", "write/1", "write/2",
    "writeln/1", "writeln/2", "print/1", "print_message/2",
    "write_canonical/1", "write_term/2", "write_term/3", "writeq/1",
    "format/1", "format/2", "format/3", "nl/0", "nl/1", "tab/1", "tab/2",
    "put_char/1", "get_char/1", "get_char/2", "peek_char/1", "peek_char/2",
    "open/3", "open/4", "close/1", "close/2", "flush_output/0",
    "flush_output/1", "current_input/1", "current_output/1",
    "set_input/1", "set_output/1", "stream_property/2", "at_end_of_stream/0",
    "at_end_of_stream/1", "read_string/5", "read_line_to_string/2",
    "read_line_to_codes/2", "see/1", "seen/0", "tell/1", "told/0",
    # environment
    "op/3", "current_op/3", "current_prolog_flag/2", "set_prolog_flag/2",
    "use_module/1", "use_module/2", "ensure_loaded/1", "consult/1",
    "module/2", "dynamic/1", "discontiguous/1", "multifile/1",
    "initialization/1", "meta_predicate/1", "garbage_collect/0",
    "statistics/2",
    "getenv/2", "setenv/2", "shell/1", "shell/2", "absolute_file_name/2",
    "absolute_file_name/3", "exists_file/1", "exists_directory/1",
))
